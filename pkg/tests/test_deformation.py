#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import pytest

from baxter.lib import ContractError
from baxter.lib.defaults import modes
from baxter.lib.linalg import Matrix, solve, subVectors
from baxter.algebra.basic import ThreeLieAlgebra
from baxter.models.cochains import Cochain, cochainFromBracket
from baxter.models.deformation import (DeformationEquivalence, TruncatedDeformation,
                                       applyEquivalence, coboundaryOf,
                                       composeEquivalences, deformationFromBracket,
                                       infinitesimal, trivialize, twistTrivial,
                                       verifyDeformation)

from conftest import fixB, fixBConstants, makeStructure, randomMatrix


def randomEquivalence(rng, dim, order):
    return DeformationEquivalence(dim, [randomMatrix(rng, dim, dim) for _ in range(order)])


def testTwistedDeformationIsValid(rng):
    base = fixB()
    D = twistTrivial(base, randomEquivalence(rng, 3, 2))
    assert verifyDeformation(D).ok
    first = infinitesimal(D)
    assert solve(D.complexes().rba(1), first.coordinates) is not None


def testComposition(rng):
    base = fixB(T=[[0, 0, 1], [0, 0, 0], [0, 0, 0]], weight=0)
    E1 = randomEquivalence(rng, 3, 3)
    E2 = randomEquivalence(rng, 3, 3)
    stepwise = applyEquivalence(twistTrivial(base, E1), E2)
    direct = twistTrivial(base, composeEquivalences(E1, E2))
    assert stepwise.sameAs(direct)


def testEquivalenceMovesInfinitesimalByCoboundary(rng):
    base = fixB()
    D = twistTrivial(base, randomEquivalence(rng, 3, 2))
    E = randomEquivalence(rng, 3, 2)
    moved = applyEquivalence(D, E)
    assert verifyDeformation(moved).ok
    difference = subVectors(infinitesimal(moved).coordinates, infinitesimal(D).coordinates)
    assert difference == coboundaryOf(D, E.psiTerms[0])


def testInverseSeries(rng):
    E = randomEquivalence(rng, 3, 3)
    phis = E.inverseTerms()
    for n in range(1, 4):
        total = Matrix.zeros(3, 3)
        for i in range(n + 1):
            total = total + E.term(i) * phis[n - i]
        assert total.isZero()


def testSimpleFourTrivializes(simpleFour, rng):
    base = simpleFour.rb
    D = twistTrivial(base, randomEquivalence(rng, 4, 3))
    assert not D.isTrivial()
    assert verifyDeformation(D).ok
    E, obstruction = trivialize(D)
    assert obstruction is None
    assert applyEquivalence(D, E).isTrivial()


def testTwistedFixBTrivializes(rng):
    D = twistTrivial(fixB(), randomEquivalence(rng, 3, 3))
    E, obstruction = trivialize(D)
    assert obstruction is None
    assert applyEquivalence(D, E).isTrivial()


def testObstructedAtFirstOrder(abelianRegular):
    base = abelianRegular.rb
    bracket = ThreeLieAlgebra(3, fixBConstants)
    D = deformationFromBracket(base, bracket, 1)
    assert verifyDeformation(D).ok
    E, obstruction = trivialize(D)
    assert E is None
    assert obstruction.order == 1
    assert obstruction.mu == cochainFromBracket(bracket)
    assert obstruction.theta.isZero()


def testOperatorOnly(abelianRegular):
    base = abelianRegular.rb
    T1 = Matrix.fromRows([[1, 2, 0], [0, -1, 0], [3, 0, 1]])
    D = TruncatedDeformation(base, [Cochain(3, 3, 2)], [T1])
    assert verifyDeformation(D, modes.operatorOnly).ok
    first = infinitesimal(D, modes.operatorOnly)
    assert first.coordinates == first.theta.values
    assert first.theta.evaluate((0, )) == (1, 0, 3)
    bracket = deformationFromBracket(base, ThreeLieAlgebra(3, fixBConstants))
    with pytest.raises(ContractError):
        verifyDeformation(bracket, modes.operatorOnly)


def testInvalidOperatorTerm():
    base = fixB()
    T1 = Matrix.fromDict(3, 3, {(0, 0): 1})
    D = TruncatedDeformation(base, [Cochain(3, 3, 2)], [T1])
    verdict = verifyDeformation(D)
    assert not verdict.ok
    assert verdict.names() == ['deformed rota-baxter relation']
    assert verdict.first().indexes == (1, 0, 1, 2)
    with pytest.raises(ContractError):
        infinitesimal(D)


def testBracketTermBreakingIdentity():
    base = makeStructure(4, {}, None, 0)
    mu1 = cochainFromBracket(ThreeLieAlgebra(4, {(0, 1, 2): (1, 0, 0, 0),
                                                 (0, 1, 3): (0, 1, 0, 0)}))
    Z = Matrix.zeros(4, 4)
    D = TruncatedDeformation(base, [mu1, Cochain(4, 4, 2)], [Z, Z])
    verdict = verifyDeformation(D)
    assert not verdict.ok
    assert verdict.names() == ['deformed fundamental identity']
    assert set(v.indexes[0] for v in verdict.violations) == set([2])
    found = dict((v.indexes, v.detail) for v in verdict.violations)
    assert found[2, 0, 1, 0, 2, 3] == '(1, 0, 0, 0)'
    assert verifyDeformation(TruncatedDeformation(base, [mu1], [Z])).ok


def testBracketTermKeepingIdentity():
    base = makeStructure(3, {}, None, 0)
    mu1 = cochainFromBracket(ThreeLieAlgebra(3, fixBConstants))
    Z = Matrix.zeros(3, 3)
    D = TruncatedDeformation(base, [mu1, Cochain(3, 3, 2)], [Z, Z])
    assert verifyDeformation(D).ok


def testShapeChecks(rng):
    base = fixB()
    with pytest.raises(ContractError):
        TruncatedDeformation(base, [Cochain(3, 3, 2)], [])
    with pytest.raises(ContractError):
        applyEquivalence(TruncatedDeformation.trivial(base, 1), randomEquivalence(rng, 3, 2))
    with pytest.raises(ContractError):
        composeEquivalences(randomEquivalence(rng, 3, 1), randomEquivalence(rng, 3, 2))
    with pytest.raises(ContractError):
        infinitesimal(TruncatedDeformation.trivial(base, 0))
    assert twistTrivial(base, DeformationEquivalence.identity(3, 2)).isTrivial()
