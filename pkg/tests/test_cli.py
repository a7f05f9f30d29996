import io
import itertools
import subprocess
import sys

import pytest

from dupstring.cli import run


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(list(argv), stdout=out, stderr=err)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_suffix_array_banana():
    code, out, _ = call("tables", "sa", "banana")
    assert code == 0
    assert [int(l.split("\t")[1]) for l in out.splitlines()] == [6, 4, 2, 1, 5, 3]


def test_membership_exit_codes():
    assert call("member", "psd", "aba", "abaabaa")[:2] == (0, "yes\n")
    assert call("member", "sd", "ab", "ba")[:2] == (1, "no\n")


def test_distance_with_range():
    assert call("dist", "pssc", "--x-range", "5:7", "abacabac")[:2] == (0, "inf\n")
    assert call("dist", "psd", "--k", "2", "01", "0101")[1] == "1\n"


def test_word_from_stdin():
    assert call("tables", "sa", "-", stdin="banana\n")[1] == call("tables", "sa", "banana")[1]


def test_usage_errors():
    code, _, err = call("member", "psd")
    assert code == 2 and err.startswith("dupstring:")
    assert call("bogus")[0] == 2
    assert call("dist", "pssc", "--x-range", "9:3", "abab")[0] == 2


def test_budget_exit():
    code, _, err = call("--budget", "5", "oracle", "anc", "pssc", "--what", "count", "abababab")
    assert code == 3 and "budget" in err


def test_alphabet_ints_before_subcommand():
    assert call("--alphabet", "ints", "member", "psd", "0 1", "0 1 0 1")[1] == "yes\n"


def test_lang_round_trip(tmp_path):
    code, dfa, _ = call("lang", "closure", "--x", "01", "--k", "1", "--family", "psd")
    assert code == 0
    f = tmp_path / "a.dfa"
    f.write_text(dfa)
    assert call("lang", "dist", "--k", "1", str(f), str(f))[1] == "0\n"
    assert call("lang", "mingen", "--k", "1", str(f))[0] == 0
    fast = call("lang", "closure", "--x", "01", "--k", "1", "--maxlen", "6")
    slow = call("oracle", "lang", "closure", "--x", "01", "--k", "1", "--maxlen", "6")
    assert fast == slow


CORPUS = ["abaab", "aabaab", "abab", "aabb", "abcab", "0110100"]


def _twin_commands():
    for w in CORPUS:
        for which in ("sa", "lcp", "runs", "sc", "maxsqend", "lpf", "lprf", "lpal", "lrep"):
            yield ("tables", which, "--g", "1", "--G", "3", w) if which in ("lpf", "lprf") else ("tables", which, w)
        for op in ("psd", "pssc", "ssc", "psc", "sd", "pd"):
            yield ("anc", op, "--what", "all", w)
            yield ("anc", op, "--what", "count", w)
            yield ("dist", op, w[:2], w)
        yield ("anc", "psd", "--k", "2", "--what", "shortest", w)
        yield ("anc", "pssc", "--what", "longest-primitive", w)
        for kind in ("p", "s", "ps"):
            yield ("sqfree", "--what", "enum", "--kind", kind, w)
            yield ("sqfree", "--what", "count", "--kind", kind, w)
        for into in ("squares", "runs", "max-squares"):
            yield ("factorize", "--into", into, w)
    for x, y in itertools.combinations(CORPUS[:4], 2):
        for what in ("any", "shortest", "longest"):
            yield ("common-anc", "pssc", x, y, "--what", what)
    for w in CORPUS:
        for x in ("ab", "a", "01"):
            yield ("member", "psd", x, w)
            yield ("member", "pssc", x, w)
            yield ("member", "psd", "--k", "1", x, w)


@pytest.mark.parametrize("argv", list(_twin_commands()), ids=" ".join)
def test_oracle_twin(argv):
    assert call(*argv) == call("oracle", *argv)


def test_console_script_module():
    res = subprocess.run([sys.executable, "-m", "dupstring", "member", "psd", "aba", "abaabaa"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "yes\n"
