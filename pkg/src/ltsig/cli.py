"""Command-line interface.

    ltsig [--catalog PATH] [--format table|csv|json] [--no-certify] COMMAND ...

Commands: ``sigma``, ``profile``, ``twistspin``, ``compare-fo``,
``catalog list`` and ``catalog dump``.  Exit status is 0 on success, 2 for
usage or input errors, 3 for domain preconditions and 4 for internal
assertion failures; every failure writes one ``Name: reason`` line to stderr.
"""
import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .catalog import builtin_catalog, dump_catalog, load_catalog, lookup
from .errors import BadAlpha, CatalogError, LTError, ParityViolation, UnknownKnot
from .exact import ExactRotation
from .seifert import alexander_polynomial
from .signature import as_alpha, averaged_sigma, profile, signature_at
from .torus import (
    CassonInput,
    TwistSpinInput,
    echeverria_example,
    equivariant_casson,
    fo_conjecture_rhs,
    twist_spin_sigma,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    output_format: str = "table"
    certify: bool = True
    precision_bits_start: int = 64

    def __post_init__(self):
        if self.output_format not in ("table", "csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.precision_bits_start < 53:
            raise ValueError("precision_bits_start must be >= 53")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def fraction_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _num(x):
    """Integers plainly, other rationals as q/n."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else fraction_str(x)


def _bool(b):
    return "true" if b else "false"


def _emit(fmt, record, out, keys=None):
    keys = keys or list(record)
    if fmt == "json":
        out.write(json.dumps({k: record[k] for k in keys}) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(keys)
        w.writerow([_cell(record[k]) for k in keys])
    else:
        out.write(" ".join(f"{k}={_cell(record[k])}" for k in keys) + "\n")


def _cell(v):
    if isinstance(v, bool):
        return _bool(v)
    if v is None:
        return ""
    return str(v)


# --- profile CSV ------------------------------------------------------------

def _end_label(e):
    return fraction_str(e) if isinstance(e, (int, Fraction)) else e.label()


def profile_rows(prof):
    """Rows (kind, start, end, value, certified) in rotation order."""
    rows = []
    arcs = prof.linear_arcs()
    for i, (start, end, value) in enumerate(arcs):
        rows.append(("arc", _end_label(start), _end_label(end), str(value), "true"))
        if i < len(prof.jumps):
            r = prof.jumps[i]
            jv = prof.jump_values[i]
            exact = isinstance(r, ExactRotation)
            rows.append(("jump", r.label(), r.label(), "" if jv is None else str(jv), _bool(exact)))
    return rows


def write_profile_csv(prof, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "start", "end", "value", "certified"])
    w.writerows(profile_rows(prof))


# --- commands ---------------------------------------------------------------

def _alpha(text, config):
    alpha = as_alpha(text)
    if config.certify and not alpha.is_exact:
        raise BadAlpha(f"{text!r} is not an exact rotation q/n (use --no-certify for decimals)")
    return alpha


def cmd_sigma(entries, config, args, out):
    K = lookup(entries, args.knot)
    alpha = _alpha(args.alpha, config)
    res = signature_at(K, alpha, config.precision_bits_start)
    avg = averaged_sigma(K, alpha, config.precision_bits_start)
    record = {
        "sigma": res.signature,
        "nullity": res.nullity,
        "averaged": avg,
        "certified": res.certified,
    }
    if config.output_format != "table":
        record = {"knot": K.name, "alpha": str(alpha), **record}
    _emit(config.output_format, record, out)


def cmd_profile(entries, config, args, out):
    K = lookup(entries, args.knot)
    prof = profile(K, config.precision_bits_start)
    fmt = args.profile_format or "csv"
    buf = io.StringIO()
    if fmt == "json":
        keys = ["kind", "start", "end", "value", "certified"]
        json.dump([dict(zip(keys, r)) for r in profile_rows(prof)], buf, indent=1)
        buf.write("\n")
    elif fmt == "table":
        for r in profile_rows(prof):
            buf.write(f"{r[0]:<5} {r[1]:>24} {r[2]:>24} {r[3]:>4} {r[4]}\n")
    else:
        write_profile_csv(prof, buf)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(buf.getvalue())
        except OSError as e:
            raise _IoError(f"cannot write {args.out}: {e.strerror}") from None
    else:
        out.write(buf.getvalue())


class _IoError(LTError):
    pass


def cmd_twistspin(entries, config, args, out):
    K = lookup(entries, args.knot)
    inp = TwistSpinInput(K, args.n, args.d, args.k)
    casson = CassonInput(args.lambda_Y)
    bits = config.precision_bits_start
    record = {
        "twist_spin_sigma": twist_spin_sigma(inp, bits),
        "equivariant_casson": _num(equivariant_casson(K, inp.twist_order, casson, bits)),
        "fo_conjecture_rhs": _num(fo_conjecture_rhs(K, inp, casson, bits)),
    }
    if (inp.twist_order, inp.char_order, inp.exponent) == (3, 5, 2):
        ex = echeverria_example(K, bits)
        record.update(
            sigma_torus=ex.sigma_torus,
            discrepancy_printed=ex.discrepancy_printed,
            discrepancy_recomputed=ex.discrepancy_recomputed,
            sigma_G=ex.sigma_G,
            discrepancy_mismatch=ex.mismatch,
        )
    if config.output_format == "table":
        first = ["twist_spin_sigma", "equivariant_casson", "fo_conjecture_rhs"]
        _emit("table", record, out, first)
        rest = [k for k in record if k not in first]
        if rest:
            _emit("table", record, out, rest)
    else:
        _emit(config.output_format, {"knot": K.name, "n": inp.twist_order, "d": inp.char_order,
                                     "k": inp.exponent, "lambda_Y": casson.lambda_Y, **record}, out)


def cmd_compare_fo(entries, config, args, out):
    K = lookup(entries, args.knot)
    bits = config.precision_bits_start
    ex = echeverria_example(K, bits)
    casson = CassonInput(args.lambda_Y)
    record = {
        "sigma_torus": ex.sigma_torus,
        "sigma_G": ex.sigma_G,
        "discrepancy_printed": ex.discrepancy_printed,
        "discrepancy_recomputed": ex.discrepancy_recomputed,
        "discrepancy_mismatch": ex.mismatch,
        "lambda_FO_X": _num(equivariant_casson(K, 3, casson, bits)),
    }
    if config.output_format != "table":
        record = {"knot": K.name, **record}
    _emit(config.output_format, record, out)


def cmd_catalog_list(entries, config, args, out):
    rows = [
        {
            "name": e.name,
            "genus": len(e.seifert_matrix) // 2,
            "source": e.source,
            "alexander": str(alexander_polynomial(e.knot)),
        }
        for e in entries
    ]
    fmt = config.output_format
    if fmt == "json":
        out.write(json.dumps(rows) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        for r in rows:
            out.write(f"{r['name']:<16} g={r['genus']:<3} {r['source']:<10} {r['alexander']}\n")


def cmd_catalog_dump(entries, config, args, out):
    dump_catalog(entries, args.out)


def _add_common(p, suppress):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--catalog", metavar="PATH", default=d, help="extra knot catalog (JSON)")
    p.add_argument("--format", choices=["table", "csv", "json"], default=d, dest="format")
    p.add_argument("--no-certify", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="allow uncertified decimal alpha values")
    p.add_argument("--precision-bits", type=int, default=d, metavar="BITS",
                   help="starting precision for certified signs (default 64)")


def build_parser():
    parser = _Parser(prog="ltsig", description="Levine-Tristram signatures of knots and knotted tori.")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("sigma", help="signature, nullity and averaged value at alpha")
    p.add_argument("knot")
    p.add_argument("alpha", help="rotation number q/n (or a decimal with --no-certify)")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("profile", help="the signature step function as CSV")
    p.add_argument("knot")
    p.add_argument("--out", "-o", metavar="PATH")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("twistspin", help="invariants of the n-twist-spun torus")
    p.add_argument("knot")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lambda_Y", type=int, nargs="?", default=0)
    p.set_defaults(func=cmd_twistspin)

    p = sub.add_parser("compare-fo", help="3-twist spin at exp(4 pi i/5) against the gauge-theory side")
    p.add_argument("knot")
    p.add_argument("--lambda", dest="lambda_Y", type=int, default=0, metavar="LAMBDA_Y")
    p.set_defaults(func=cmd_compare_fo)

    p = sub.add_parser("catalog", help="catalog operations")
    csub = p.add_subparsers(dest="catalog_command", parser_class=_Parser)
    c = csub.add_parser("list")
    c.set_defaults(func=cmd_catalog_list)
    c = csub.add_parser("dump")
    c.add_argument("out", metavar="PATH")
    c.set_defaults(func=cmd_catalog_dump)

    for action in sub.choices.values():
        _add_common(action, suppress=True)
    for action in csub.choices.values():
        _add_common(action, suppress=True)
    return parser


def _fail(err, code, name, message):
    err.write(f"{name}: {message}\n")
    return code


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        return _fail(err, EXIT_USAGE, "UsageError", str(e))
    if not hasattr(args, "func"):
        return _fail(err, EXIT_USAGE, "UsageError", "no command given")
    fmt = args.format
    args.profile_format = fmt
    try:
        config = RunConfig(
            output_format=fmt or "table",
            certify=not args.no_certify,
            precision_bits_start=args.precision_bits or 64,
        )
    except ValueError as e:
        return _fail(err, EXIT_USAGE, "UsageError", str(e))
    try:
        entries = load_catalog(args.catalog) if args.catalog else list(builtin_catalog())
        args.func(entries, config, args, out)
    except (CatalogError, UnknownKnot, BadAlpha) as e:
        return _fail(err, EXIT_USAGE, type(e).__name__, str(e))
    except OSError as e:
        return _fail(err, EXIT_USAGE, "IoError", f"{e.filename}: {e.strerror}")
    except _IoError as e:
        return _fail(err, EXIT_USAGE, "IoError", str(e))
    except LTError as e:
        return _fail(err, EXIT_DOMAIN, type(e).__name__, str(e))
    except ParityViolation as e:
        return _fail(err, EXIT_INTERNAL, "ParityViolation", str(e))
    except AssertionError as e:
        return _fail(err, EXIT_INTERNAL, "AssertionError", str(e) or "internal assertion failed")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
