"""Shared fixtures. Heavy structures are built once per session via lru_cache
so hypothesis-driven tests can reuse them without fixture-scope friction."""

from __future__ import annotations

from functools import lru_cache

import pytest

from falab.algebra import AlgebraSpec
from falab.constructors import (
    dual_group_hopf,
    group_from_generators,
    group_hopf,
    irreducible_bundle,
    matrix_algebra,
    sweedler_h4,
)
from falab.fields import FieldDescriptor
from falab.frobenius import build_frobenius
from falab.fusion import build_g0


@lru_cache(maxsize=None)
def field_q() -> FieldDescriptor:
    return FieldDescriptor.rationals()


@lru_cache(maxsize=None)
def field_fp(p: int) -> FieldDescriptor:
    return FieldDescriptor.prime_field(p)


@lru_cache(maxsize=None)
def field_cyclo(n: int) -> FieldDescriptor:
    return FieldDescriptor.cyclotomic(n)


@lru_cache(maxsize=None)
def s3_table():
    return group_from_generators([(1, 0, 2), (1, 2, 0)])


@lru_cache(maxsize=None)
def s4_table():
    return group_from_generators([(1, 0, 2, 3), (1, 2, 3, 0)])


@lru_cache(maxsize=None)
def cn_table(n: int):
    cycle = tuple((i + 1) % n for i in range(n)) if n > 1 else (0,)
    return group_from_generators([cycle])


@lru_cache(maxsize=None)
def qs3_hopf():
    return group_hopf(s3_table(), field_q())


@lru_cache(maxsize=None)
def s3_bundle():
    return irreducible_bundle("S3")


@lru_cache(maxsize=None)
def s4_bundle():
    return irreducible_bundle("S4")


@lru_cache(maxsize=None)
def cn_bundle(n: int):
    return irreducible_bundle(f"C{n}")


@lru_cache(maxsize=None)
def s3_fusion():
    b = s3_bundle()
    return build_g0(b.hopf, b.modules, labels=list(b.labels))


@lru_cache(maxsize=None)
def s4_fusion():
    b = s4_bundle()
    return build_g0(b.hopf, b.modules, labels=list(b.labels))


@lru_cache(maxsize=None)
def cn_fusion(n: int):
    b = cn_bundle(n)
    return build_g0(b.hopf, b.modules, labels=list(b.labels))


@lru_cache(maxsize=None)
def m2_with_trace():
    return matrix_algebra(2, field_q())


@lru_cache(maxsize=None)
def sweedler():
    return sweedler_h4(field_q())


@lru_cache(maxsize=None)
def dual_s3():
    return dual_group_hopf(s3_table(), field_q())


@lru_cache(maxsize=None)
def dual_number_algebra() -> AlgebraSpec:
    """Q[x]/(x^2) on the basis {1, x}."""
    Q = field_q()
    one, zero = Q.one(), Q.zero()
    return AlgebraSpec.from_triples(
        Q, 2,
        [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)],
        unit=[one, zero],
        labels=["1", "x"],
    )


@lru_cache(maxsize=None)
def qc2_algebra() -> AlgebraSpec:
    """Q[g]/(g^2 - 1) on the basis {1, g}."""
    Q = field_q()
    one, zero = Q.one(), Q.zero()
    return AlgebraSpec.from_triples(
        Q, 2,
        [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one), (1, 1, 0, one)],
        unit=[one, zero],
        labels=["1", "g"],
    )


@lru_cache(maxsize=None)
def frobenius_fixture_pool():
    """Nonsingular structures over varied fields, for dual-basis laws."""
    pool = []
    # matrix algebra with the trace form
    _, F = m2_with_trace()
    pool.append(("M2(Q)-trace", F))
    # group algebra of S3 with the coefficient-of-identity functional
    H = qs3_hopf()
    Q = field_q()
    lam = [Q.one() if i == s3_table().identity else Q.zero() for i in range(6)]
    pool.append(("QS3-coeff-identity", build_frobenius(H.algebra, lam)))
    # dual numbers with the coefficient-of-x functional
    A = dual_number_algebra()
    pool.append(("Q[x]/(x^2)-coeff-x", build_frobenius(A, [Q.zero(), Q.one()])))
    # C3 over F_3 (non-semisimple group algebra)
    F3 = field_fp(3)
    H3 = group_hopf(cn_table(3), F3)
    lam3 = [F3.one(), F3.zero(), F3.zero()]
    pool.append(("F3C3-coeff-identity", build_frobenius(H3.algebra, lam3)))
    # C2 over F_2
    F2 = field_fp(2)
    H2 = group_hopf(cn_table(2), F2)
    pool.append(("F2C2-coeff-identity",
                 build_frobenius(H2.algebra, [F2.one(), F2.zero()])))
    # C4 over the fourth cyclotomic field
    K4 = field_cyclo(4)
    H4 = group_hopf(cn_table(4), K4)
    lam4 = [K4.one()] + [K4.zero()] * 3
    pool.append(("K4C4-coeff-identity", build_frobenius(H4.algebra, lam4)))
    # Sweedler's algebra with its integral functional
    from falab.hopf import frobenius_from_integrals

    FS, _ = frobenius_from_integrals(sweedler())
    pool.append(("sweedler-integral-form", FS))
    return pool


# thin pytest fixtures over the cached builders


@pytest.fixture(scope="session")
def Q():
    return field_q()


@pytest.fixture(scope="session")
def F3():
    return field_fp(3)


@pytest.fixture(scope="session")
def K4():
    return field_cyclo(4)
