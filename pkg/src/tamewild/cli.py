"""Command-line surface: file ingestion, invariant reports, equivalence
queries, orbit tables, and containment falsification.

Matrix file format: a header line "p n m a", then a blocks of n lines of m
integers (reduced mod p on load).  Transform file format: a header line
"p a b", then b polynomial lines of '+'-joined terms "c*x1x2...", with "1"
spelling the empty word.  Lines starting with '#' are comments.

Exit codes are frozen for scripting: 0 yes / 1 no / 2 parse error /
3 shape error / 4 too large / 5 not falsified.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .equivalence import (
    orbit_table,
    pair_similarity_problem,
    similar,
    similar_bruteforce,
    sim_similar,
    similarity_problem,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    ModulusMismatch,
    NotSquare,
    ShapeMismatch,
    TamewildError,
    TooLarge,
)
from .invariants import (
    char_poly,
    invariant_factors,
    rational_canonical_form,
    spectrum_in_field,
)
from .matrix import Matrix, MatrixTuple
from .wildness import NcPoly, Outcome, Transform, falsify_containment

EXIT_YES = 0
EXIT_NO = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_TOO_LARGE = 4
EXIT_NOT_FALSIFIED = 5


class FileParseError(TamewildError):
    """Input file rejected; the message names the offending line."""


@dataclass(frozen=True)
class MatrixFile:
    """Parsed matrix file: header (p, n, m, a) plus the a matrices."""

    modulus: int
    rows: int
    cols: int
    matrices: tuple[Matrix, ...]


def _significant_lines(text: str, origin: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    if not out:
        raise FileParseError(f"{origin}:1: file has no content")
    return out


def _ints(line: str, lineno: int, origin: str, expected: int | None = None) -> list[int]:
    toks = line.split()
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise FileParseError(f"{origin}:{lineno}: expected integers, got {line!r}")
    if expected is not None and len(vals) != expected:
        raise FileParseError(
            f"{origin}:{lineno}: expected {expected} integers, got {len(vals)}"
        )
    return vals


def parse_matrix_text(text: str, origin: str = "<input>") -> MatrixFile:
    lines = _significant_lines(text, origin)
    head_no, head = lines[0]
    p, n, m, a = _ints(head, head_no, origin, expected=4)
    try:
        from .algebra import check_prime

        check_prime(p)
    except ValueError as e:
        raise FileParseError(f"{origin}:{head_no}: {e}")
    if n < 1 or m < 1 or a < 1:
        raise FileParseError(f"{origin}:{head_no}: header counts must be positive")
    body = lines[1:]
    if len(body) != a * n:
        raise FileParseError(
            f"{origin}:{head_no}: header promises {a} blocks of {n} rows "
            f"({a * n} lines), body has {len(body)}"
        )
    matrices = []
    for k in range(a):
        flat = []
        for r in range(n):
            lineno, line = body[k * n + r]
            flat.extend(_ints(line, lineno, origin, expected=m))
        matrices.append(Matrix(n, m, flat, p))
    return MatrixFile(p, n, m, tuple(matrices))


def read_matrix_file(path: str) -> MatrixFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FileParseError(f"{path}:0: {e}")
    return parse_matrix_text(text, origin=path)


_WORD_RE = re.compile(r"(?:x(\d+))")


def _parse_term(term: str, arity: int, modulus: int, lineno: int, origin: str):
    term = term.strip()
    if "*" not in term:
        raise FileParseError(
            f"{origin}:{lineno}: term {term!r} must have the form coeff*word"
        )
    coeff_s, word_s = term.split("*", 1)
    try:
        coeff = int(coeff_s.strip())
    except ValueError:
        raise FileParseError(f"{origin}:{lineno}: bad coefficient {coeff_s!r}")
    word_s = word_s.strip()
    if word_s == "1":
        return (), coeff
    if not re.fullmatch(r"(?:x\d+)+", word_s):
        raise FileParseError(f"{origin}:{lineno}: bad word {word_s!r}")
    letters = tuple(int(d) for d in _WORD_RE.findall(word_s))
    for letter in letters:
        if not 1 <= letter <= arity:
            raise FileParseError(
                f"{origin}:{lineno}: unknown variable x{letter} (arity is {arity})"
            )
    return letters, coeff


def parse_transform_text(text: str, origin: str = "<input>") -> Transform:
    lines = _significant_lines(text, origin)
    head_no, head = lines[0]
    p, a, b = _ints(head, head_no, origin, expected=3)
    try:
        from .algebra import check_prime

        check_prime(p)
    except ValueError as e:
        raise FileParseError(f"{origin}:{head_no}: {e}")
    if a < 1 or b < 1:
        raise FileParseError(f"{origin}:{head_no}: arities must be positive")
    body = lines[1:]
    if len(body) != b:
        raise FileParseError(
            f"{origin}:{head_no}: header promises {b} polynomial lines, body has {len(body)}"
        )
    polys = []
    for lineno, line in body:
        terms: dict[tuple[int, ...], int] = {}
        for term in line.split("+"):
            word, coeff = _parse_term(term, a, p, lineno, origin)
            terms[word] = terms.get(word, 0) + coeff
        polys.append(NcPoly(terms, a, p))
    return Transform(polys)


def read_transform_file(path: str) -> Transform:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FileParseError(f"{path}:0: {e}")
    return parse_transform_text(text, origin=path)


def format_matrix_file(matrices, header_comment: str | None = None) -> str:
    """Serialize matrices back into the accepted file format."""
    matrices = list(matrices)
    first = matrices[0]
    out = []
    if header_comment:
        out.append(f"# {header_comment}")
    out.append(f"{first.modulus} {first.rows} {first.cols} {len(matrices)}")
    for m in matrices:
        for i in range(m.rows):
            row = m.entries[i * m.cols : (i + 1) * m.cols]
            out.append(" ".join(str(e) for e in row))
    return "\n".join(out) + "\n"


def format_transform_file(t: Transform, header_comment: str | None = None) -> str:
    out = []
    if header_comment:
        out.append(f"# {header_comment}")
    out.append(f"{t.modulus} {t.arity_in} {t.arity_out}")
    out.extend(str(poly) for poly in t.polys)
    return "\n".join(out) + "\n"


def _matrix_rows(m: Matrix) -> list[list[int]]:
    return m.row_lists()


def _require_single_square(mf: MatrixFile, path: str) -> Matrix:
    if len(mf.matrices) != 1:
        raise ShapeMismatch(f"{path}: expected one matrix, file holds {len(mf.matrices)}")
    m = mf.matrices[0]
    if not m.is_square():
        raise NotSquare(f"{path}: expected a square matrix, got {m.rows}x{m.cols}")
    return m


def _require_pair(mf: MatrixFile, path: str) -> MatrixTuple:
    if len(mf.matrices) != 2:
        raise ShapeMismatch(f"{path}: expected a 2-tuple, file holds {len(mf.matrices)}")
    if mf.rows != mf.cols:
        raise NotSquare(f"{path}: tuple components must be square, got {mf.rows}x{mf.cols}")
    return MatrixTuple(mf.matrices)


def cmd_invariants(args) -> int:
    m = _require_single_square(read_matrix_file(args.path), args.path)
    factors = invariant_factors(m)
    spectrum = spectrum_in_field(m)
    rcf = rational_canonical_form(factors)
    print(f"modulus: {m.modulus}")
    print(f"size: {m.rows}")
    print(f"rank: {m.rank()}")
    print(f"det: {m.det()}")
    print(f"char_poly: {char_poly(m)}")
    print("spectrum: {" + ", ".join(str(r) for r in spectrum) + "}")
    print(f"invariant_factors: {factors}")
    print("rational_canonical_form:")
    print(rcf)
    return EXIT_YES


def cmd_similar(args) -> int:
    a = _require_single_square(read_matrix_file(args.a), args.a)
    b = _require_single_square(read_matrix_file(args.b), args.b)
    if args.mode == "bruteforce":
        s = similar_bruteforce(a, b)
        if s is None:
            print("NO")
            return EXIT_NO
        print("YES")
        print("conjugator:")
        print(format_matrix_file([s], header_comment="conjugator S with S*A*S^-1 = B"), end="")
        return EXIT_YES
    if similar(a, b):
        print("YES")
        return EXIT_YES
    print("NO")
    return EXIT_NO


def cmd_simsimilar(args) -> int:
    t = _require_pair(read_matrix_file(args.a), args.a)
    u = _require_pair(read_matrix_file(args.b), args.b)
    s = sim_similar(t, u)
    if s is None:
        print("NO")
        return EXIT_NO
    print("YES")
    print("conjugator:")
    print(format_matrix_file([s], header_comment="shared conjugator S"), end="")
    return EXIT_YES


def _representative_text(obj) -> str:
    if isinstance(obj, MatrixTuple):
        return " | ".join(" ".join(str(e) for e in m.entries) for m in obj)
    return " ".join(str(e) for e in obj.entries)


def _representative_json(obj):
    if isinstance(obj, MatrixTuple):
        return [_matrix_rows(m) for m in obj]
    return _matrix_rows(obj)


def cmd_orbits(args) -> int:
    if args.problem == "single":
        problem = similarity_problem(args.n, args.p)
    else:
        problem = pair_similarity_problem(args.n, args.p)
    table = orbit_table(problem)
    reps = table.representative_objects()
    if args.json:
        payload = {
            "problem": args.problem,
            "n": args.n,
            "p": args.p,
            "object_count": len(problem.objects),
            "class_count": table.class_count,
            "classes": [
                {"size": len(c), "representative": _representative_json(rep)}
                for c, rep in zip(table.classes, reps)
            ],
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_YES
    print(f"problem: {args.problem} n={args.n} p={args.p}")
    print(f"objects: {len(problem.objects)}")
    print(f"classes: {table.class_count}")
    for k, (cls, rep) in enumerate(zip(table.classes, reps)):
        print(f"class {k}: size={len(cls)} rep= {_representative_text(rep)}")
    return EXIT_YES


def cmd_falsify(args) -> int:
    transform = read_transform_file(args.transform)
    p = args.p if args.p is not None else transform.modulus
    verdict = falsify_containment(transform, args.n, p, budget=args.budget)
    if args.json:
        payload = {
            "verdict": verdict.outcome.value,
            "note": verdict.note,
            "steps": verdict.steps_used,
            "witness": None,
            "images": None,
        }
        if verdict.witness is not None:
            w1, w2 = verdict.witness
            payload["witness"] = {
                "first": _representative_json(w1),
                "second": _representative_json(w2),
            }
        if verdict.images is not None:
            i1, i2 = verdict.images
            payload["images"] = {
                "first": _matrix_rows(i1),
                "second": _matrix_rows(i2),
            }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_YES if verdict.falsified else EXIT_NOT_FALSIFIED
    print(f"verdict: {verdict.outcome.value}")
    if verdict.note:
        print(f"note: {verdict.note}")
    print(f"steps: {verdict.steps_used}")
    if verdict.witness is not None:
        w1, w2 = verdict.witness
        print("witness A:")
        print(format_matrix_file(list(w1)), end="")
        print("witness B:")
        print(format_matrix_file(list(w2)), end="")
    if verdict.images is not None:
        i1, i2 = verdict.images
        print("image A:")
        print(format_matrix_file([i1]), end="")
        print("image B:")
        print(format_matrix_file([i2]), end="")
    if verdict.witness is not None:
        print("replay: simsimilar(witness A, witness B) expects NO; "
              "similar(image A, image B) expects YES")
    return EXIT_YES if verdict.falsified else EXIT_NOT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamewild",
        description="Exact similarity invariants over prime fields, orbit "
        "search, and containment falsification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="full invariant report for one square matrix")
    p_inv.add_argument("path")
    p_inv.set_defaults(func=cmd_invariants)

    p_sim = sub.add_parser("similar", help="decide similarity of two matrices")
    p_sim.add_argument("a")
    p_sim.add_argument("b")
    p_sim.add_argument("--mode", choices=("invariant", "bruteforce"), default="invariant")
    p_sim.set_defaults(func=cmd_similar)

    p_ssim = sub.add_parser("simsimilar", help="decide simultaneous similarity of two pairs")
    p_ssim.add_argument("a")
    p_ssim.add_argument("b")
    p_ssim.set_defaults(func=cmd_simsimilar)

    p_orb = sub.add_parser("orbits", help="enumerate equivalence classes exhaustively")
    p_orb.add_argument("--problem", choices=("single", "pairs"), required=True)
    p_orb.add_argument("--n", type=int, required=True)
    p_orb.add_argument("--p", type=int, required=True)
    p_orb.add_argument("--json", action="store_true")
    p_orb.set_defaults(func=cmd_orbits)

    p_fal = sub.add_parser("falsify", help="refute a candidate pairs-to-singles containment")
    p_fal.add_argument("transform")
    p_fal.add_argument("--n", type=int, default=2)
    p_fal.add_argument("--p", type=int, default=None)
    p_fal.add_argument("--budget", type=int, default=None,
                       help="step budget charged per field multiply-add")
    p_fal.add_argument("--json", action="store_true")
    p_fal.set_defaults(func=cmd_falsify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ShapeMismatch, NotSquare, ModulusMismatch, ArityMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SHAPE
    except (TooLarge, BudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOO_LARGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
