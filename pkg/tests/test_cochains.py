#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import random

import pytest

from baxter.lib import ContractError, Rational, SizeRefused
from baxter.lib.linalg import Matrix
from baxter.algebra.basic import ThreeLieAlgebra
from baxter.models.cochains import (Cochain, argumentKeys, canonicalKey, checkSize,
                                    cochainDimension, cochainFromBracket,
                                    cochainFromMatrix, constantsFromCochain,
                                    enumerateBasis, keyIndex, matrixFromCochain,
                                    splitCoordinates)

from conftest import simpleFourConstants


def det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def testDimensions():
    assert cochainDimension(3, 1, 0) == 1
    assert cochainDimension(3, 2, 1) == 6
    assert cochainDimension(3, 1, 4) == 9
    assert cochainDimension(4, 2, 3) == 48
    assert len(argumentKeys(4, 3)) == 24
    assert argumentKeys(3, 2) == (((), (0, 1, 2)), )


def testKeyTablesStayBounded():
    for d in range(3, 7):
        for n in range(5):
            argumentKeys(d, n)
            keyIndex(d, n)
    for cached in (argumentKeys, keyIndex):
        info = cached.cache_info()
        assert info.maxsize == 64
        assert info.currsize <= info.maxsize
    assert keyIndex(4, 3)[argumentKeys(4, 3)[5]] == 5


def testBasisOrder():
    basis = enumerateBasis(3, 2, 1)
    assert [(b.tail, b.target) for b in basis[:3]] == [(0, 0), (0, 1), (1, 0)]
    basis = enumerateBasis(4, 1, 3)
    assert basis[0].args == (0, 1, 0, 1, 2)
    assert basis[4].args == (0, 2, 0, 1, 2)


def testCanonicalKey():
    assert canonicalKey((1, 0, 2, 1, 0), 3) == (1, (((0, 1), ), (0, 1, 2)))
    assert canonicalKey((1, 0, 0, 1, 2), 3) == (-1, (((0, 1), ), (0, 1, 2)))
    assert canonicalKey((0, 1, 1, 2, 0), 3) == (1, (((0, 1), ), (0, 1, 2)))
    assert canonicalKey((0, 0, 1, 2, 3), 3)[0] == 0
    assert canonicalKey((1, 2, 1), 2)[0] == 0
    with pytest.raises(ContractError):
        canonicalKey((0, 1, 2), 3)


def testFromEntriesSigns():
    f = Cochain.fromEntries(3, 1, 2, {(1, 0, 2): (1, )})
    assert f.values == (-1, )
    assert f.evaluate((2, 1, 0)) == (1, )
    assert f.entries() == {(0, 1, 2): (-1, )}


def testDegenerateEntries():
    f = Cochain.fromEntries(3, 1, 2, {(0, 0, 1): (0, )})
    assert f.isZero()
    with pytest.raises(ContractError):
        Cochain.fromEntries(3, 1, 2, {(0, 0, 1): (1, )})
    with pytest.raises(ContractError):
        Cochain.fromEntries(3, 1, 2, {(0, 1, 3): (1, )})
    with pytest.raises(ContractError):
        Cochain.fromEntries(3, 2, 2, {(0, 1, 2): (1, )})


def testEvaluateVectorsIsMultilinear():
    f = Cochain.fromEntries(3, 2, 2, {(0, 1, 2): (2, -1)})
    rng = random.Random(1)
    for _ in range(10):
        u, v, w = [tuple(Rational(rng.randint(-3, 3)) for _ in range(3)) for _ in range(3)]
        det = det3(u, v, w)
        assert f.evaluateVectors([u, v, w]) == (2 * det, -det)


def testEvaluateVectorsOnPairs():
    f = Cochain.fromEntries(3, 1, 3, {(0, 1, 0, 1, 2): (1, )})
    e0, e1, e2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert f.evaluateVectors([e1, e0, e0, e1, e2]) == (-1, )
    both = (1, 1, 0)
    assert f.evaluateVectors([both, e1, e0, e1, e2]) == (1, )
    assert f.evaluateVectors([both, both, e0, e1, e2]) == (0, )


def testArithmetic():
    f = Cochain.fromEntries(3, 1, 2, {(0, 1, 2): (3, )})
    g = Cochain.fromEntries(3, 1, 2, {(0, 1, 2): (1, )})
    assert (f - g).values == (2, )
    assert (f + g.scaled(-3)).isZero()
    with pytest.raises(ContractError):
        f + Cochain(3, 2, 2)


def testBracketAndMatrixReadings():
    algebra = ThreeLieAlgebra(4, simpleFourConstants)
    f = cochainFromBracket(algebra)
    assert constantsFromCochain(f) == algebra.constants
    M = Matrix.fromRows([[1, 2, 0], [0, 0, 5]])
    assert cochainFromMatrix(M).evaluate((1, )) == (2, 0)
    assert matrixFromCochain(cochainFromMatrix(M)) == M
    with pytest.raises(ContractError):
        matrixFromCochain(f)


def testSizeGuard():
    assert checkSize(3, 3, 3, limit=9) == 9
    with pytest.raises(SizeRefused) as info:
        checkSize(6, 6, 4)
    assert info.value.size == 15 * 15 * 20 * 6


def testSplitCoordinates():
    assert splitCoordinates((1, 2, 3), (2, 1)) == [(1, 2), (3, )]
    with pytest.raises(ContractError):
        splitCoordinates((1, 2), (3, ))
