"""Command-line front end.

Exit codes: 0 success, 1 negative decision, 2 usage or input error,
3 budget exceeded.  Tables print one "index<TAB>value" line per position,
1-based, with "inf" for infinity and a leading "# sentinel-none=..." line."""
from __future__ import annotations

import argparse
import math
import sys
from typing import Optional

import numpy as np

from . import naive
from .core_index import build_index
from .distances import (INF_DIST, bpsd_distance, dup_distance_tables, pscd_table,
                        pssc_distance, sscd_table)
from .gapped_tables import lpal_lrep, lpf_bounded, lpf_func, lprf_bounded, lprf_func
from .languages import (Dfa, closure_automaton, is_finite, language_distance,
                        minimal_generator, one_step_image)
from .membership_ancestors import (bpsd_ancestors, common_ancestor,
                                   psd_membership, psdk_membership, pssc_ancestor_profile,
                                   pssc_membership, sd_pd_flags)
from .ops_kernel import DEFAULT_BUDGET, OpKind, closure_upto, oracle_distance_table
from .sequences import (NAMES, fibonacci_psd_experiment, generate, psd_thue_morse_bounds,
                        verify_omega)
from .square_tables import compute_runs, square_tables
from .squarefree import (count_pssf, enumerate_pssf, factor_into_runs, factor_into_squares,
                         longest_primitive_pssc_ancestor, longest_pssf,
                         max_square_factorization)
from .words import BudgetError, as_array, as_tuple

TABLES = ("sa", "lcp", "runs", "left-right", "sc", "minrightend", "maxleftend", "maxsqend",
          "lpf", "lprf", "lpal", "lrep")


class UsageError(Exception):
    pass


class Negative(Exception):
    """A decision came out negative; the output is already written."""


# --------------------------------------------------------------------------
# input and output helpers


def _read_word(text: str, ints: bool) -> np.ndarray:
    if ints:
        try:
            return as_array([int(tok) for tok in text.split()])
        except ValueError as e:
            raise UsageError(f"bad integer word: {e}") from None
    return as_array(text.rstrip("\n"))


def _positionals(args, want: int) -> list:
    words = list(args.words)
    if len(words) != want:
        raise UsageError(f"expected {want} positional word(s), got {len(words)}")
    return words


def _word_arg(args, before: int = 0) -> np.ndarray:
    """The main word w after ``before`` other positionals: given
    positionally, as '-' for stdin, or with --file (exactly one source)."""
    path = getattr(args, "file", None)
    want = before + (path is None)
    if len(args.words) != want:
        raise UsageError("give the word w exactly once: positionally, as '-', or with --file")
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    elif args.words[-1] == "-":
        text = sys.stdin.read()
    else:
        text = args.words[-1]
    a = _read_word(text, args.alphabet == "ints")
    if len(a) == 0:
        raise UsageError("empty word")
    return a


def _small_word(args, text: str) -> np.ndarray:
    a = _read_word(text, args.alphabet == "ints")
    if len(a) == 0:
        raise UsageError("empty word")
    return a


def _show(args, word) -> str:
    t = as_tuple(word)
    if args.alphabet == "ints":
        return " ".join(str(c) for c in t)
    return "".join(chr(c) for c in t)


def _num(v) -> str:
    if v is None or v == math.inf or v == INF_DIST:
        return "inf"
    return str(int(v))


def _column(out, values, n: int, header: str) -> None:
    out.append(f"# sentinel-none={header}")
    for i in range(1, n + 1):
        out.append(f"{i}\t{_num(values[i])}")


def _op(args) -> OpKind:
    try:
        op = OpKind.parse(args.op, getattr(args, "k", None))
        if getattr(args, "k", None) is not None and op.k is None:
            op = OpKind(op.family, args.k)
        return op
    except ValueError as e:
        raise UsageError(str(e)) from None


def _x_and_w(args):
    if args.x_range:
        w = _word_arg(args)
        try:
            i, j = (int(v) for v in args.x_range.split(":"))
        except ValueError:
            raise UsageError("--x-range wants i:j") from None
        if not 1 <= i <= j <= len(w):
            raise UsageError("--x-range outside the word")
        return w[i - 1 : j].copy(), w
    w = _word_arg(args, 1)
    return _small_word(args, args.words[0]), w


# --------------------------------------------------------------------------
# tables


def _gapped_params(args, n: int):
    if args.gfile:
        with open(args.gfile, encoding="utf-8") as fh:
            garr = [int(v) for v in fh.read().split()]
        if len(garr) != n:
            raise UsageError("--gfile must hold n integers")
        return None, None, garr
    if args.g is None or args.G is None:
        raise UsageError("lpf/lprf need --g and --G, or --gfile")
    return args.g, args.G, None


def cmd_tables(args, out, oracle: bool) -> None:
    w = _word_arg(args)
    n = len(w)
    which = args.which
    if which in ("sa", "lcp"):
        if oracle:
            t = as_tuple(w)
            sa = sorted(range(1, n + 1), key=lambda i: t[i - 1 :])
            lcp = [0] + [_naive_lcp(t[sa[r - 1] - 1 :], t[sa[r] - 1 :]) for r in range(1, n)]
        else:
            idx = build_index(w)
            sa, lcp = idx.sa.tolist(), idx.lcp.tolist()
        vals = sa if which == "sa" else lcp
        for r in range(1, n + 1):
            out.append(f"{r}\t{vals[r - 1]}")
        return
    if which == "runs":
        runs = naive.runs(w) if oracle else [(r.i, r.j, r.p) for r in compute_runs(w)]
        out.append("# start\tend\tperiod")
        for s, e, p in sorted(runs):
            out.append(f"{s}\t{e}\t{p}")
        return
    if which in ("left-right", "sc", "minrightend", "maxleftend", "maxsqend"):
        if oracle:
            d = naive.square_tables(w)
        else:
            st = square_tables(w)
            d = dict(SC=st.SC, MinRightEnd=st.MinRightEnd, MaxLeftEnd=st.MaxLeftEnd,
                     left=st.left, right=st.right, MaxSqEnd=st.MaxSqEnd)
        if which == "left-right":
            out.append(f"# sentinel-none=0 (left), {n + 1} (right)")
            for i in range(1, n + 1):
                out.append(f"{i}\t{int(d['left'][i - 1])}\t{int(d['right'][i - 1])}")
            return
        key, sent = {"sc": ("SC", "0"), "minrightend": ("MinRightEnd", str(n + 1)),
                     "maxleftend": ("MaxLeftEnd", "0"), "maxsqend": ("MaxSqEnd", "0")}[which]
        _column(out, [0] + [int(v) for v in d[key]], n, sent)
        return
    if which in ("lpal", "lrep"):
        kind = "palindrome" if which == "lpal" else "repeat"
        vals = naive.gapped_table(w, which) if oracle else lpal_lrep(w, kind)
        _column(out, vals, n, "0")
        return
    g, G, garr = _gapped_params(args, n)
    if oracle:
        vals = naive.gapped_table(w, which, g, G, garr)
    elif garr is not None:
        vals = (lpf_func if which == "lpf" else lprf_func)(w, garr)
    else:
        vals = (lpf_bounded if which == "lpf" else lprf_bounded)(w, g, G)
    _column(out, vals, n, "0")


def _naive_lcp(a, b) -> int:
    m = 0
    while m < min(len(a), len(b)) and a[m] == b[m]:
        m += 1
    return m


# --------------------------------------------------------------------------
# membership and distances


def _prefix_of(x, w) -> bool:
    return len(x) <= len(w) and bool(np.array_equal(w[: len(x)], x))


def _suffix_of(x, w) -> bool:
    return len(x) <= len(w) and bool(np.array_equal(w[len(w) - len(x) :], x))


def _fast_member(op: OpKind, x, w) -> bool:
    n, m = len(w), len(x)
    if m > n:
        return False
    fam, k = op.family, op.k
    if fam == "PSD":
        return psd_membership(w, x) if k is None else psdk_membership(w, x, k)
    if fam == "PSSC":
        return pssc_membership(w, x)
    if fam in ("SD", "PD"):
        kk = min(k or n, n)
        fl = sd_pd_flags(w, kk)
        if fam == "SD":
            return _prefix_of(x, w) and fl.s(m)
        return _suffix_of(x, w) and fl.p(n - m + 1)
    if fam == "SSC":
        return _prefix_of(x, w) and sscd_table(w)[m] != INF_DIST
    return _suffix_of(x, w) and pscd_table(w)[n - m + 1] != INF_DIST


def _fast_distance(op: OpKind, x, w) -> float:
    n, m = len(w), len(x)
    fam, k = op.family, op.k
    if fam == "PSD":
        return bpsd_distance(x, w, n if k is None else min(k, n))
    if fam == "PSSC":
        return pssc_distance(x, w)
    if fam in ("SD", "SSC"):
        if not _prefix_of(x, w):
            return math.inf
        d = sscd_table(w) if fam == "SSC" else dup_distance_tables(w, min(k or n, n), "suffix")
        return math.inf if d[m] == INF_DIST else int(d[m])
    if not _suffix_of(x, w):
        return math.inf
    d = pscd_table(w) if fam == "PSC" else dup_distance_tables(w, min(k or n, n), "prefix")
    return math.inf if d[n - m + 1] == INF_DIST else int(d[n - m + 1])


def _oracle_distance(op: OpKind, x, w, budget: int) -> float:
    n, m = len(w), len(x)
    dist = oracle_distance_table(op, as_tuple(w), budget)
    t, xt = as_tuple(w), as_tuple(x)
    best = math.inf
    for i in range(1, n - m + 2):
        if t[i - 1 : i - 1 + m] == xt and (i, i + m - 1) in dist:
            best = min(best, dist[(i, i + m - 1)])
    return best


def cmd_member(args, out, oracle: bool) -> None:
    op = _op(args)
    x, w = _x_and_w(args)
    if oracle:
        ok = len(x) <= len(w) and as_tuple(w) in closure_upto(op, as_tuple(x), len(w), args.budget)
    else:
        ok = _fast_member(op, x, w)
    out.append("yes" if ok else "no")
    if not ok:
        raise Negative


def cmd_dist(args, out, oracle: bool) -> None:
    op = _op(args)
    x, w = _x_and_w(args)
    if len(x) > len(w):
        raise UsageError("need |x| <= |w|")
    d = _oracle_distance(op, x, w, args.budget) if oracle else _fast_distance(op, x, w)
    out.append(_num(d))


# --------------------------------------------------------------------------
# ancestors


def _brute_primitive(t, op: OpKind) -> bool:
    k = op.k or len(t)
    pre = any(naive.is_square(t[: 2 * h]) for h in range(1, min(k, len(t) // 2) + 1))
    suf = any(naive.is_square(t[len(t) - 2 * h :]) for h in range(1, min(k, len(t) // 2) + 1))
    return not (op.prefix_side and pre) and not (op.suffix_side and suf)


def _pick(coords, what: str, prim=None):
    coords = sorted(coords)
    if what == "count":
        return len(coords)
    if what == "all":
        return coords
    if what == "longest-primitive":
        coords = [c for c in coords if prim(c)]
        return min(coords, key=lambda c: (-(c[1] - c[0]), c[0]), default=None)
    return min(coords, key=lambda c: (c[1] - c[0], c[0]), default=None)


def cmd_anc(args, out, oracle: bool) -> None:
    op = _op(args)
    w = _word_arg(args)
    n = len(w)
    if op.family not in ("PSD", "PSSC"):
        raise UsageError("anc supports psd, psd_k and pssc")
    what = args.what
    t = as_tuple(w)
    if oracle:
        coords = set(oracle_distance_table(op, t, args.budget))
        res = _pick(coords, what, lambda c: _brute_primitive(t[c[0] - 1 : c[1]], op))
    elif op.family == "PSSC":
        prof = pssc_ancestor_profile(w)
        if what == "all":
            res = sorted(prof.ancestors())
        elif what == "count":
            res = prof.count
        elif what == "shortest":
            res = prof.shortest
        else:
            res = longest_primitive_pssc_ancestor(w)
    else:
        anc = bpsd_ancestors(w, min(op.k or n, n))
        res = {"all": lambda: sorted(anc.all()), "count": anc.count, "shortest": anc.shortest,
               "longest-primitive": anc.longest_primitive}[what]()
    if what == "count":
        out.append(str(res))
    elif what == "all":
        out.extend(f"{i}\t{j}" for i, j in res)
    elif res is None:
        out.append("none")
        raise Negative
    else:
        out.append(f"{res[0]}\t{res[1]}")


def cmd_common_anc(args, out, oracle: bool) -> None:
    op = _op(args)
    if op.family not in ("PSD", "PSSC"):
        raise UsageError("common-anc supports psd, psd_k and pssc")
    xs, ys = _positionals(args, 2)
    x, y = _small_word(args, xs), _small_word(args, ys)
    if oracle:
        res = None
        cx = _contents(op, x, args.budget)
        cy = _contents(op, y, args.budget)
        common = [c for c in cx if c in cy]
        if common:
            key = {"any": lambda c: (cx[c], len(c)), "shortest": lambda c: (len(c), cx[c]),
                   "longest": lambda c: (-len(c), cx[c])}[args.what]
            res = min(common, key=key)
    else:
        res = common_ancestor(x, y, op, args.what)
    if res is None:
        out.append("none")
        raise Negative
    out.append(_show(args, res))


def _contents(op: OpKind, w, budget: int) -> dict:
    t = as_tuple(w)
    out = {}
    for i, j in oracle_distance_table(op, t, budget):
        c = t[i - 1 : j]
        if c not in out or i < out[c]:
            out[c] = i
    return out


# --------------------------------------------------------------------------
# square-free factors and factorizations


def cmd_sqfree(args, out, oracle: bool) -> None:
    w = _word_arg(args)
    pairs = naive.pssf_pairs(w, args.kind) if oracle else None
    if args.what == "enum":
        pairs = pairs if oracle else enumerate_pssf(w, args.kind)
        out.extend(f"{i}\t{j}" for i, j in pairs)
    elif args.what == "count":
        out.append(str(len(pairs) if oracle else count_pssf(w, args.kind)))
    else:
        if args.kind != "ps":
            raise UsageError("--what longest uses --kind ps")
        best = min(pairs, key=lambda c: (-(c[1] - c[0]), c[0])) if oracle else longest_pssf(w)
        out.append(f"{best[0]}\t{best[1]}")


def cmd_factorize(args, out, oracle: bool) -> None:
    w = _word_arg(args)
    if args.into == "max-squares":
        if oracle:
            factors, tags = naive.max_square_factorization(w)
        else:
            f = max_square_factorization(w)
            factors, tags = f.factors, f.tags
        out.append(f"# squares={sum(t == 'square' for t in tags)}")
        out.extend(f"{s}\t{e}\t{t}" for (s, e), t in zip(factors, tags))
        return
    if oracle:
        factors = (naive.square_factorization if args.into == "squares" else naive.run_factorization)(w)
    else:
        f = (factor_into_squares if args.into == "squares" else factor_into_runs)(w)
        factors = None if f is None else f.factors
    if factors is None:
        out.append("none")
        raise Negative
    out.extend(f"{s}\t{e}" for s, e in factors)


# --------------------------------------------------------------------------
# languages and sequences


def _load_dfa(path: str) -> Dfa:
    try:
        with open(path, encoding="utf-8") as fh:
            return Dfa.from_text(fh.read())
    except OSError as e:
        raise UsageError(str(e)) from None


def _emit_dfa(args, out, d: Dfa) -> None:
    out.append((d.to_dot() if args.dot else d.to_text()).rstrip("\n"))


def cmd_lang(args, out, oracle: bool) -> None:
    budget = args.budget
    if args.action == "closure":
        x = _small_word(args, args.x)
        alph = None if args.symbols is None else as_tuple(_small_word(args, args.symbols))
        if oracle:
            words = closure_upto(OpKind(args.family, args.k), as_tuple(x), args.maxlen, budget)
            out.extend(_show(args, u) for u in sorted(words, key=lambda u: (len(u), u)))
            return
        d = closure_automaton(x, args.k, args.family, alph, budget)
        if args.maxlen is not None:
            out.extend(_show(args, u) for u in sorted(d.words_upto(args.maxlen), key=lambda u: (len(u), u)))
        else:
            _emit_dfa(args, out, d)
    elif args.action == "image":
        _emit_dfa(args, out, one_step_image(_load_dfa(args.words[0]), args.k, budget))
    elif args.action == "mingen":
        _emit_dfa(args, out, minimal_generator(_load_dfa(args.words[0]), args.k, budget))
    elif args.action == "finite":
        fin = is_finite(_load_dfa(args.words[0]))
        out.append("yes" if fin else "no")
        if not fin:
            raise Negative
    else:
        if len(args.words) != 2:
            raise UsageError("lang dist needs two DFA files")
        d = language_distance(_load_dfa(args.words[0]), _load_dfa(args.words[1]), args.k)
        out.append(_num(d))


def cmd_seq(args, out, oracle: bool) -> None:
    if args.action == "gen":
        out.append("".join(str(int(c)) for c in generate(args.name, args.n)))
    elif args.action == "verify":
        try:
            op = OpKind.parse(args.op, args.k)
        except ValueError as e:
            raise UsageError(str(e)) from None
        res = verify_omega(op, args.name, args.n)
        if not res.ok:
            out.append(f"no chain; longest prefix reached {res.reached}")
            raise Negative
        out.append(f"# seed={''.join(str(c) for c in res.derivation.start)} steps={len(res.derivation.steps)}")
        out.extend(str(m) for m in res.lengths)
    elif args.action == "bounds":
        out.append("# n\tcomplement\tlongest\tbound\tholds")
        for r in psd_thue_morse_bounds(args.n):
            out.append(f"{r.n}\t{int(r.complemented)}\t{r.longest}\t{r.bound}\t{'yes' if r.holds else 'no'}")
    else:
        out.append("# p\tn\tmember")
        for p, q, ok in fibonacci_psd_experiment(args.k, args.n):
            out.append(f"{p}\t{q}\t{'yes' if ok else 'no'}")


# --------------------------------------------------------------------------
# parser


COMMANDS = {
    "tables": cmd_tables, "member": cmd_member, "dist": cmd_dist, "anc": cmd_anc,
    "common-anc": cmd_common_anc, "sqfree": cmd_sqfree, "factorize": cmd_factorize,
    "lang": cmd_lang, "seq": cmd_seq,
}


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common(defaults: bool) -> argparse.ArgumentParser:
    # subcommand copies must not overwrite values given before the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--alphabet", choices=("bytes", "ints"),
                   default="bytes" if defaults else argparse.SUPPRESS,
                   help="symbols are characters (default) or space-separated integers")
    p.add_argument("--budget", type=_positive,
                   default=DEFAULT_BUDGET if defaults else argparse.SUPPRESS,
                   help="size budget for brute-force closures and automata")
    return p


def _add_commands(sub, common) -> None:
    def word(p, meta="w"):
        p.add_argument("words", nargs="*", metavar=meta, help="the word ('-' reads stdin)")
        p.add_argument("--file", help="read the word w from a file")

    p = sub.add_parser("tables", parents=[common], help="per-position tables")
    p.add_argument("which", choices=TABLES)
    p.add_argument("--g", type=int)
    p.add_argument("--G", type=int)
    p.add_argument("--gfile", help="file with g(1..n) for function-bounded gaps")
    word(p)

    for name, text in (("member", "is w derivable from x"), ("dist", "fewest steps from x to w")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("op")
        p.add_argument("--k", type=_positive)
        p.add_argument("--x-range", help="take x = w[i..j], given as i:j")
        word(p, "[x] w")

    p = sub.add_parser("anc", parents=[common], help="ancestors of w")
    p.add_argument("op")
    p.add_argument("--k", type=_positive)
    p.add_argument("--what", choices=("all", "count", "shortest", "longest-primitive"), default="count")
    word(p)

    p = sub.add_parser("common-anc", parents=[common], help="common ancestor of x and y")
    p.add_argument("op")
    p.add_argument("--k", type=_positive)
    p.add_argument("--what", choices=("any", "shortest", "longest"), default="any")
    p.add_argument("words", nargs="*", metavar="x y")

    p = sub.add_parser("sqfree", parents=[common], help="factors free of square prefixes/suffixes")
    p.add_argument("--what", choices=("enum", "count", "longest"), default="count")
    p.add_argument("--kind", choices=("p", "s", "ps"), default="ps")
    word(p)

    p = sub.add_parser("factorize", parents=[common], help="square-related factorizations")
    p.add_argument("--into", choices=("squares", "runs", "max-squares"), default="squares")
    word(p)

    p = sub.add_parser("lang", parents=[common], help="regular languages (DFA text files)")
    p.add_argument("action", choices=("closure", "image", "mingen", "finite", "dist"))
    p.add_argument("words", nargs="*", metavar="dfa", help="DFA file(s)")
    p.add_argument("--x", help="seed word for closure")
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--family", type=str.upper, choices=("SD", "PD", "PSD"), default="PSD")
    p.add_argument("--symbols", help="alphabet for closure automata (a word listing the symbols)")
    p.add_argument("--maxlen", type=int, help="list closure words up to this length instead")
    p.add_argument("--dot", action="store_true", help="Graphviz output")

    p = sub.add_parser("seq", parents=[common], help="infinite-word prefixes")
    p.add_argument("action", choices=("gen", "verify", "bounds", "fib-experiment"))
    p.add_argument("--name", choices=NAMES, default="thue_morse")
    p.add_argument("--op", default="SSC")
    p.add_argument("--k", type=_positive)
    p.add_argument("--n", type=_positive, default=64)


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    parser = argparse.ArgumentParser(prog="dupstring", parents=[_common(True)],
                                     description="Prefix/suffix duplication and square tools.")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_commands(sub, common)
    po = sub.add_parser("oracle", help="same commands through brute-force routes")
    osub = po.add_subparsers(dest="inner", required=True)
    _add_commands(osub, common)
    return parser


def _validate(args) -> None:
    if args.command == "lang" or getattr(args, "inner", None) == "lang":
        if args.action == "closure" and args.x is None:
            raise UsageError("lang closure needs --x")
        if args.action != "closure" and not args.words:
            raise UsageError(f"lang {args.action} needs a DFA file")
        if (args.command == "oracle") and args.action == "closure" and args.maxlen is None:
            raise UsageError("oracle closure needs --maxlen")


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        bad = [a for a in extra if a.startswith("-") and a != "-"]
        if bad:
            parser.error(f"unrecognized arguments: {' '.join(bad)}")
    except SystemExit as e:
        return int(e.code or 0)
    if hasattr(args, "words"):
        args.words = list(args.words) + extra
    elif extra:
        print(f"dupstring: unexpected arguments: {' '.join(extra)}", file=stderr)
        return 2
    oracle = args.command == "oracle"
    name = args.inner if oracle else args.command
    out: list = []
    code = 0
    try:
        _validate(args)
        COMMANDS[name](args, out, oracle)
    except Negative:
        code = 1
    except BudgetError as e:
        print(f"dupstring: budget exceeded: {e}", file=stderr)
        return 3
    except (UsageError, ValueError, IndexError, OSError) as e:
        print(f"dupstring: {e}", file=stderr)
        return 2
    if out:
        stdout.write("\n".join(out) + "\n")
    return code


def main() -> None:
    sys.exit(run())
