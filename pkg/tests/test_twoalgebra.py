#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import pytest

from baxter.lib import ContractError
from baxter.lib.linalg import Matrix, isZeroVector, kernelBasis, unitVector
from baxter.algebra.basic import Representation, RotaBaxterStructure, ThreeLieAlgebra
from baxter.models.cochains import Cochain, cochainDimension
from baxter.models.differentials import Complexes
from baxter.models.twoalgebra import (CrossedModule, RB2Algebra, ThreeLie2Algebra,
                                      cocycleToSkeletal, crossedModuleFromIdeal,
                                      crossedModuleToStrict, skeletalFromCochains,
                                      skeletalToCocycle, strictToCrossedModule,
                                      verify2Algebra, verifyCrossedModule,
                                      verifyRb2Algebra, zero2Algebra)

from conftest import fixB, fixBConstants


def splitPair(P, vector):
    split = cochainDimension(P.dim, P.mdim, 3)
    return (Cochain(P.dim, P.mdim, 3, vector[:split]),
            Cochain(P.dim, P.mdim, 2, vector[split:]))


@pytest.mark.parametrize('name', ['fixBRegular', 'rankOne', 'abelianRegular',
                                  'derivedClosure'])
def testCocyclesGiveSkeletalAlgebras(name, request):
    P = request.getfixturevalue(name)
    cx = Complexes(P)
    basis = kernelBasis(cx.rba(3))
    assert basis
    for vector in basis[:6]:
        f, theta = splitPair(P, vector)
        A = cocycleToSkeletal(P.rb, P, f, theta, cx)
        assert A.underlying.isSkeletal()
        found, foundTheta, ok = skeletalToCocycle(A)
        assert ok
        assert (found, foundTheta) == (f, theta)


def testNonCocycleFailsBothWays(fixBRegular):
    P = fixBRegular
    cx = Complexes(P)
    D = cx.rba(3)
    size = D.cols
    candidates = [unitVector(size, k) for k in range(size)
                  if not isZeroVector(D.apply(unitVector(size, k)))]
    assert candidates
    f, theta = splitPair(P, candidates[0])
    A = skeletalFromCochains(P.rb, P, f, theta)
    assert not skeletalToCocycle(A)[2]
    verdict = verify2Algebra(A.underlying).extend(verifyRb2Algebra(A))
    assert not verdict.ok
    with pytest.raises(ContractError):
        cocycleToSkeletal(P.rb, P, f, theta, cx)


def idealModule():
    return crossedModuleFromIdeal(fixB(), Matrix.fromColumns([(1, 0, 0)], 3))


def testCrossedModuleFromIdeal():
    C = idealModule()
    assert verifyCrossedModule(C).ok
    assert C.S.rho == {(1, 2): Matrix.fromRows([[1]])}
    assert C.T1 == Matrix.fromRows([[1]])
    A, verdict = crossedModuleToStrict(C)
    assert verdict.ok and A.isStrict()
    assert strictToCrossedModule(A).sameAs(C)


def testWholeAlgebraAsIdeal():
    C = crossedModuleFromIdeal(fixB(), Matrix.identity(3))
    assert C.g1.sameAs(ThreeLieAlgebra(3, fixBConstants))
    A, _ = crossedModuleToStrict(C)
    recovered = strictToCrossedModule(A)
    assert recovered.sameAs(C)
    assert recovered.g1.bracket(0, 1, 2) == (1, 0, 0)


def testZeroActionIsNotCrossed():
    base = fixB()
    g1 = ThreeLieAlgebra(3, fixBConstants)
    S = Representation(base.algebra, 3, {})
    C = CrossedModule(base, g1, Matrix.identity(3), S, Matrix.identity(3))
    verdict = verifyCrossedModule(C)
    assert 'S(d, d) = bracket' in verdict.names()
    assert 'd equivariance' in verdict.names()
    with pytest.raises(ContractError):
        crossedModuleToStrict(C)


def testUnverifiedBaseRefused():
    algebra = ThreeLieAlgebra(3, fixBConstants)
    base = RotaBaxterStructure(algebra, Matrix.identity(3), -1)
    C = CrossedModule(base, ThreeLieAlgebra(1), Matrix.zeros(3, 1),
                      Representation(algebra, 1, {}), Matrix.identity(1))
    with pytest.raises(ContractError):
        verifyCrossedModule(C)


def testPerturbedHigherBracket():
    A, _ = crossedModuleToStrict(idealModule())
    G = A.underlying
    l5 = Cochain.fromEntries(3, 1, 3, {(0, 1, 0, 1, 2): (1, )})
    perturbed = ThreeLie2Algebra(G.g0, G.S, G.dmap, l5)
    verdict = verify2Algebra(perturbed)
    assert '2-algebra (3)' in verdict.names()
    with pytest.raises(ContractError):
        strictToCrossedModule(RB2Algebra(perturbed, A.T0, A.T1, A.T2, A.weight))


def testOperatorMismatch():
    A, _ = crossedModuleToStrict(idealModule())
    shifted = RB2Algebra(A.underlying, A.T0, Matrix.fromRows([[2]]), A.T2, A.weight)
    assert 'rota-baxter 2-algebra (a)' in verifyRb2Algebra(shifted).names()


def testZeroTwoAlgebra():
    base = fixB()
    G = zero2Algebra(base.algebra, 2)
    assert G.isSkeletal() and G.isStrict()
    assert verify2Algebra(G).ok
    A = RB2Algebra(G, base.T, Matrix.identity(2), Cochain(3, 2, 2), base.weight)
    assert verifyRb2Algebra(A).ok
    f, theta, ok = skeletalToCocycle(A)
    assert ok and f.isZero() and theta.isZero()


def testShapeChecks():
    base = fixB()
    with pytest.raises(ContractError):
        ThreeLie2Algebra(base.algebra, Representation(base.algebra, 1, {}),
                         Matrix.zeros(3, 2), Cochain(3, 1, 3))
    A, _ = crossedModuleToStrict(idealModule())
    with pytest.raises(ContractError):
        skeletalToCocycle(A)
