"""
Command help texts and output examples
"""

# ============= COMBINATORICS =============

ENUMERATE_HELP = """
List partitions of N of one kind.

\b
Kinds:
  all             every partition of N
  regular         p-regular partitions (every multiplicity < p)
  class-regular   p-class regular partitions (no part divisible by p)
  cores           p-cores of size N
  multipartitions r-multipartitions of total size N (needs --r)
  q               the index set Q_p(N): multipartition x p-core pairs
  strict          partitions with distinct parts
  odd-strict      partitions into distinct odd parts
"""

ENUMERATE_EXAMPLE = {
    "kind": "regular",
    "n": 4,
    "p": 2,
    "r": None,
    "count": 2,
    "items": [[4], [3, 1]]
}

WEIGHTS_HELP = """
The weight of every partition of N as a product of q-integers [p]_l.

\b
  e   w_E over the p-class regular partitions
  g   w_G over the p-class regular partitions
  h   w_H over all partitions
"""

GLAISHER_HELP = """
Apply Glaisher steps (p copies of i -> one part p*i) until PARTITION is
p-regular; reports the image, the step counts and their weight.
"""

DELTA_HELP = """
The product form of the graded Cartan determinant, optionally split into
its block factors or expanded as a polynomial in q.
"""

DELTA_EXAMPLE = {
    "p": 2,
    "n": 4,
    "value": {"p": 2, "label": "[2]_1^2 [2]_2", "factors": {"1": 2, "2": 1}},
    "expanded": None,
    "blocks": None
}

HABACUS_HELP = """
H-core and H-quotient of a strict PARTITION at p = 2. With --unfold the
argument may be any partition; its diagonal hook lengths are used.
"""

HABACUS_EXAMPLE = {
    "partition": [9, 7, 3, 2],
    "core": [3],
    "quotient": [4],
    "unfolded": None
}

SERIES_CHECK_HELP = """
Compare every generating function with direct enumeration up to x^ORDER.
Exits 1 if any coefficient differs.
"""

# ============= MATRICES =============

DECOMP_HELP = """
The graded decomposition matrix D_n(q) by the LLT algorithm; only nonzero
entries are listed. Results are cached per (p, n).
"""

CARTAN_HELP = """
The graded Cartan matrix C_n(q) = D_n(q)^T D_n(q), one of its blocks
(--block CORE) or its determinant (--det).
"""

SNF_HELP = """
Elementary divisors of C_n(q) (or one block) over Q[q, q^-1], normalised
to monic polynomials with nonzero constant term.
"""

CONJECTURE_HELP = """
Compare the Smith form of C_n(q) with the divisor chains of {w_E} and {w_G}
(or, with --blockwise, every block with its {w_H} chain). Differences are
data: the command exits 2 when one is found and 0 when all chains agree.
"""

CONJECTURE_EXAMPLE = {
    "p": 2,
    "n": 2,
    "blockwise": False,
    "all_equal": True,
    "comparisons": [
        {
            "lhs": "snf",
            "rhs": "w_E",
            "equal": True,
            "first_difference": None,
            "lhs_divisors": ["1 + q^2"],
            "rhs_divisors": ["1 + q^2"]
        }
    ]
}

# ============= VERIFICATION =============

VERIFY_HELP = """
Run one verification STATEMENT over its default range, or every statement
with --all. The range bound is --n, --d, --m or --order depending on the
statement (see --list). STATEMENT is a descriptive name such as
determinant-products or a short id such as thm-4.1; --theorem 7.1 is the
same as thm-7.1.

\b
Exit codes:
  0  every statement passed (elementary-divisors: no difference)
  1  a statement failed
  2  elementary-divisors reported a difference
  3  usage error or refused range
"""

VERIFICATION_REPORT_EXAMPLE = {
    "statement": "cardinalities",
    "parameters": {"p": [2], "n_max": 12},
    "verdict": "pass",
    "checked": 13,
    "witness": None,
    "timing": {"started_at": "2026-01-15T10:30:00Z", "runtime_seconds": 0.41}
}
