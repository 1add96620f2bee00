#!/usr/bin/env python3
"""Independent oracle for graded-dimension tables used by the C++ tests.

Expands rational Hilbert series P(t)/prod(1-t^d) as power series with exact
integer arithmetic, and derives the numerators from first principles where a
combinatorial definition exists (Gaussian binomials, permutation length
counts, binomial coefficients).  Emits tests/expected_series.hpp.

Run from the repository root:  python3 tools/oracles/series_oracle.py
"""

from itertools import permutations
import os


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def series_expand(numer, denom_degrees, cutoff):
    """Coefficients of numer(t) / prod_d (1 - t^d) through t^cutoff."""
    coeffs = list(numer) + [0] * max(0, cutoff + 1 - len(numer))
    coeffs = coeffs[: cutoff + 1]
    for d in denom_degrees:
        # multiply by 1/(1-t^d): prefix sums with stride d
        for i in range(d, cutoff + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def even_part(coeffs, cutoff):
    """Dims at degrees 0,2,...,cutoff; asserts odd coefficients vanish."""
    for i in range(1, min(len(coeffs), cutoff + 1), 2):
        assert coeffs[i] == 0, f"odd-degree coefficient at {i}"
    return [coeffs[i] for i in range(0, cutoff + 1, 2)]


def gaussian_binomial(m, k):
    """[m choose k]_q as integer coefficient list in q (cell-count path)."""
    # number of k-subsets of {1..m} weighted by inversion statistic:
    # build by the recurrence [m,k] = [m-1,k-1] + q^k [m-1,k]
    table = {(0, 0): [1]}
    for mm in range(1, m + 1):
        for kk in range(0, mm + 1):
            a = table.get((mm - 1, kk - 1), [0]) if kk > 0 else [0]
            b = table.get((mm - 1, kk), [0]) if kk <= mm - 1 else [0]
            shifted = [0] * kk + b
            width = max(len(a), len(shifted))
            table[(mm, kk)] = [
                (a[i] if i < len(a) else 0) + (shifted[i] if i < len(shifted) else 0)
                for i in range(width)
            ]
    out = table[(m, k)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def length_generating(n):
    """Coefficient list in q of sum over S_n of q^{length(w)}."""
    out = []
    for p in permutations(range(n)):
        l = inversions(p)
        if l >= len(out):
            out.extend([0] * (l + 1 - len(out)))
        out[l] += 1
    return out


def double_degrees(poly_in_q):
    """Reindex q^k -> t^{2k}."""
    out = [0] * (2 * (len(poly_in_q) - 1) + 1)
    for k, c in enumerate(poly_in_q):
        out[2 * k] = c
    return out


CUTOFF = 20


def main():
    entries = []

    def emit(name, numer_q, denom, comment):
        numer = double_degrees(numer_q)
        dims = even_part(series_expand(numer, denom, CUTOFF), CUTOFF)
        entries.append((name, dims, comment))

    # projective space Betti numerators: 1 + q + ... + q^n
    for n in range(1, 7):
        emit(
            f"kP{n}BorelSl2",
            [1] * (n + 1),
            [2],
            f"(1+t^2+...+t^{2*n})/(1-t^2)",
        )
    for n in (3, 4, 5):
        emit(
            f"kP{n}KostantSl2",
            [1] * (n + 1),
            [4],
            f"(1+t^2+...+t^{2*n})/(1-t^4)",
        )
    for n in (2, 3, 4):
        emit(
            f"kP{n}BorelSl{n + 1}",
            [1] * (n + 1),
            [2] * n,
            f"(1+t^2+...+t^{2*n})/(1-t^2)^{n}",
        )

    gr = gaussian_binomial(4, 2)
    assert gr == [1, 1, 2, 1, 1]
    emit("kGr24BorelSl4", gr, [2, 2, 2], "Gaussian [4,2]_t / (1-t^2)^3")
    emit("kGr24EmbeddedBorel", gr, [2], "Gaussian [4,2]_t / (1-t^2)")

    f3 = length_generating(3)
    assert f3 == [1, 2, 2, 1]
    emit("kF3Borel", f3, [2, 2], "S_3 length polynomial / (1-t^2)^2")
    emit("kF3Kostant", f3, [4, 6], "S_3 length polynomial / ((1-t^4)(1-t^6))")

    emit("kP2Kostant", [1, 1, 1], [4, 6], "(1+t^2+t^4)/((1-t^4)(1-t^6))")

    binom = [1]
    for l in range(1, 5):
        binom = poly_mul(binom, [1, 1])
        emit(
            f"kBott{l}BorelA2",
            binom,
            [2, 2],
            f"(1+t^2)^{l}/(1-t^2)^2",
        )

    emit("kSchubertDivisorGr24", [1, 1, 2, 1], [2, 2, 2], "(1+t^2+2t^4+t^6)/(1-t^2)^3")
    emit("kDiscriminantP3", [1, 1, 1, 1], [4], "(1+t^2+t^4+t^6)/(1-t^4)")

    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    path = os.path.join(root, "tests", "expected_series.hpp")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        f.write("// Graded-dimension tables at degrees 0,2,...,20.\n")
        f.write("// Generated by tools/oracles/series_oracle.py; do not edit by hand.\n")
        f.write("#pragma once\n#include <array>\n\nnamespace equicoh::expected {\n\n")
        f.write(f"inline constexpr int kCutoff = {CUTOFF};\n\n")
        for name, dims, comment in entries:
            f.write(f"// {comment}\n")
            body = ", ".join(str(d) for d in dims)
            f.write(
                f"inline constexpr std::array<long long, {len(dims)}> {name}{{{{{body}}}}};\n\n"
            )
        f.write("} // namespace equicoh::expected\n")
    print(f"wrote {path} with {len(entries)} tables")
    for name, dims, _ in entries:
        print(f"{name}: {dims}")


if __name__ == "__main__":
    main()
