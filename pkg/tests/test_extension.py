#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import pytest

from baxter.lib import ContractError
from baxter.lib.linalg import Matrix, combine, isZeroVector, kernelBasis, unitVector
from baxter.algebra.basic import formatVector
from baxter.models.cochains import Cochain, cochainDimension
from baxter.models.differentials import Complexes
from baxter.models.extension import (AbelianExtension, ExtensionCocycle,
                                     buildExtension, extractCocycle,
                                     isoFromCohomologous, sectionDifference)

from conftest import randomMatrix


failureArity = {'fundamental identity': 5, 'rota-baxter relation': 3}


def cocycleSize(P):
    return cochainDimension(P.dim, P.mdim, 2) + cochainDimension(P.dim, P.mdim, 1)


def randomCocycle(P, cx, rng):
    """ A random combination of the degree 2 cocycle basis.

    """
    basis = kernelBasis(cx.rba(2))
    vector = combine([(rng.randint(-2, 2), v) for v in basis], cocycleSize(P))
    return ExtensionCocycle.fromCoordinates(P.dim, P.mdim, vector)


@pytest.mark.parametrize('name', ['fixBRegular', 'rankOne', 'abelianRegular', 'fixBTrivial'])
def testValidityMatchesCocycleCondition(name, request, rng):
    P = request.getfixturevalue(name)
    cx = Complexes(P)
    size = cocycleSize(P)
    seen = set()
    for k in range(100):
        if k % 2:
            cocycle = randomCocycle(P, cx, rng)
        else:
            vector = [rng.choice((-1, 0, 0, 1)) for _ in range(size)]
            cocycle = ExtensionCocycle.fromCoordinates(P.dim, P.mdim, vector)
        E, verdict = buildExtension(P, cocycle, cx)
        expected = isZeroVector(cx.rba(2).apply(cocycle.coordinates))
        assert verdict.ok == expected
        if verdict.ok:
            assert E.validate().ok
        else:
            first = verdict.first()
            assert first.name in failureArity
            assert len(first.indexes) == failureArity[first.name]
            assert first.detail
        seen.add(verdict.ok)
    assert True in seen


def testBuildThenExtract(fixBRegular, rng):
    cx = Complexes(fixBRegular)
    for _ in range(5):
        cocycle = randomCocycle(fixBRegular, cx, rng)
        E, verdict = buildExtension(fixBRegular, cocycle, cx)
        assert verdict.ok
        found, P = extractCocycle(E, E.canonicalSection())
        assert found == cocycle
        assert P.rep.sameAs(fixBRegular.rep)
        assert P.TM == fixBRegular.TM


def testChangingSectionMovesByCoboundary(rankOne, rng):
    P = rankOne
    cx = Complexes(P)
    E, verdict = buildExtension(P, randomCocycle(P, cx, rng), cx)
    s1 = E.canonicalSection()
    G = randomMatrix(rng, P.mdim, P.dim)
    s2 = s1 + E.inclusion * G
    c1, _ = extractCocycle(E, s1)
    c2, _ = extractCocycle(E, s2)
    gamma = sectionDifference(E, s1, s2)
    assert gamma.evaluate((0, )) == tuple(-v for v in G.column(0))
    bounded = cx.rba(1).apply(gamma.values + (0, ) * P.mdim)
    assert (c1 - c2).coordinates == bounded
    zeta = isoFromCohomologous(P, c1, c2, gamma, cx)
    assert zeta[P.dim, 0] == gamma.evaluate((0, ))[0]


def testIsoRejectsWrongGamma(fixBRegular):
    P = fixBRegular
    cx = Complexes(P)
    for k in range(P.dim * P.mdim):
        values = unitVector(P.dim * P.mdim, k)
        if not isZeroVector(cx.rba(1).apply(values + (0, ) * P.mdim)):
            break
    gamma = Cochain(P.dim, P.mdim, 1, values)
    zero = ExtensionCocycle.zero(P.dim, P.mdim)
    with pytest.raises(ContractError) as info:
        isoFromCohomologous(P, zero, zero, gamma, cx)
    message = str(info.value)
    assert 'residual psi' in message
    bounded = cx.rba(1).apply(values + (0, ) * P.mdim)
    residual = ExtensionCocycle.fromCoordinates(P.dim, P.mdim, [-v for v in bounded])
    shown = list(residual.psi.entries().items()) + list(residual.chi.entries().items())
    assert shown
    for args, value in shown:
        assert '%s: %s' % (args, formatVector(value)) in message


def testZeroCocycleIsSemidirect(fixBRegular):
    E, verdict = buildExtension(fixBRegular, ExtensionCocycle.zero(3, 3))
    assert verdict.ok
    assert E.total.algebra.bracket(1, 2, 3) == (0, 0, 0, 1, 0, 0)
    assert E.total.T == Matrix.identity(6)


def testSectionChecks(fixBRegular):
    E, _ = buildExtension(fixBRegular, ExtensionCocycle.zero(3, 3))
    with pytest.raises(ContractError):
        extractCocycle(E, Matrix.zeros(6, 3))
    with pytest.raises(ContractError):
        extractCocycle(E, Matrix.identity(3))


def testValidateCatchesBadMaps(fixBRegular):
    E, _ = buildExtension(fixBRegular, ExtensionCocycle.zero(3, 3))
    wrong = AbelianExtension(E.total, E.projection.transpose(), E.projection,
                             E.base, E.TM)
    verdict = wrong.validate()
    assert 'projection kills inclusion' in verdict.names()


def testInvalidCocycleRefusesExtraction(fixBRegular):
    cx = Complexes(fixBRegular)
    for k in range(cocycleSize(fixBRegular)):
        vector = unitVector(cocycleSize(fixBRegular), k)
        if not isZeroVector(cx.rba(2).apply(vector)):
            break
    E, verdict = buildExtension(fixBRegular,
                                ExtensionCocycle.fromCoordinates(3, 3, vector), cx)
    assert not verdict.ok
    with pytest.raises(ContractError):
        extractCocycle(E, E.canonicalSection())


def testCocycleShapes():
    with pytest.raises(ContractError):
        ExtensionCocycle(Cochain(3, 1, 1), Cochain(3, 1, 1))
    with pytest.raises(ContractError):
        ExtensionCocycle(Cochain(3, 1, 2), Cochain(3, 2, 1))
