#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import random

import pytest

from baxter.lib import ContractError, SizeRefused
from baxter.lib.linalg import Matrix
from baxter.algebra.basic import RBRepresentation, Representation
from baxter.models.cochains import Cochain, argumentKeys, cochainDimension, keyArgs
from baxter.models.differentials import (Complexes, chainMapCheck, deltaMatrix,
                                         partialMatrix, partialValue, phiMatrix,
                                         phiValue, rbaDifferential, squareZeroCheck)

from conftest import largeFixtures, smallFixtures


def randomCochain(P, degree, seed):
    rng = random.Random(seed)
    size = cochainDimension(P.dim, P.mdim, degree)
    return Cochain(P.dim, P.mdim, degree, [rng.randint(-2, 2) for _ in range(size)])


@pytest.mark.parametrize('name', smallFixtures)
def testSquaresVanish(name, request):
    P = request.getfixturevalue(name)
    cx = Complexes(P)
    for which in ('3lie', 'rbo', 'rba'):
        verdict = squareZeroCheck(P, which, 3, cx)
        assert verdict.ok, verdict.asDict()


@pytest.mark.parametrize('name', smallFixtures)
def testPhiIsChainMap(name, request):
    P = request.getfixturevalue(name)
    verdict = chainMapCheck(P, 3)
    assert verdict.ok, verdict.asDict()


@pytest.mark.parametrize('name,nMax', largeFixtures)
def testLargerFixtures(name, nMax, request):
    P = request.getfixturevalue(name)
    cx = Complexes(P)
    assert chainMapCheck(P, nMax, cx).ok
    for which in ('3lie', 'rbo', 'rba'):
        assert squareZeroCheck(P, which, nMax, cx).ok


def testDegreeZero(fixBRegular):
    assert deltaMatrix(fixBRegular, 0).matrix.isZero()
    assert partialMatrix(fixBRegular, 0).matrix.isZero()
    assert phiMatrix(fixBRegular, 0).matrix == Matrix.identity(3)


def testCoboundaryOfTrivialModule(fixBTrivial):
    delta = deltaMatrix(fixBTrivial, 1).matrix
    assert (delta.rows, delta.cols) == (1, 3)
    assert delta.row(0) == (-1, 0, 0)


def testPartialRoutesAgree(rankOne, fixBRegular, abelianFour):
    for P in (rankOne, fixBRegular, abelianFour):
        for n in (1, 2, 3):
            partialMatrix(P, n)


def testPartialValueMatchesMatrix(rankOne):
    rep = Representation(rankOne.rep.algebra, 3, rankOne.rep.rho)
    unverified = RBRepresentation(rep, rankOne.TM, rankOne.rb)
    matrix = partialMatrix(rankOne, 2).matrix
    f = randomCochain(rankOne, 2, 4)
    image = Cochain(3, 3, 3, matrix.apply(f.values))
    for key in argumentKeys(3, 3):
        args = keyArgs(key, 3)
        assert partialValue(unverified, f, args) == image.evaluate(args)
    swapped = (1, 0, 0, 1, 2)
    assert partialValue(unverified, f, swapped) == \
        tuple(-v for v in partialValue(unverified, f, (0, 1, 0, 1, 2)))


def testPhiValueMatchesMatrix(rankOne):
    for n in (1, 2, 3):
        f = randomCochain(rankOne, n, n)
        image = Cochain(3, 3, n, phiMatrix(rankOne, n).matrix.apply(f.values))
        for key in argumentKeys(3, n):
            args = keyArgs(key, n)
            assert phiValue(rankOne, f, args) == image.evaluate(args)


def testPhiIsSkew(rankOne):
    f = randomCochain(rankOne, 3, 8)
    value = phiValue(rankOne, f, (0, 2, 0, 1, 2))
    assert phiValue(rankOne, f, (2, 0, 0, 1, 2)) == tuple(-v for v in value)
    assert phiValue(rankOne, f, (0, 2, 1, 0, 2)) == tuple(-v for v in value)
    assert phiValue(rankOne, f, (0, 2, 1, 2, 0)) == value


@pytest.mark.parametrize('name', ['abelianRegular', 'simpleFour', 'fixBRegular'])
def testPhiVanishes(name, request):
    P = request.getfixturevalue(name)
    for n in (1, 2):
        assert phiMatrix(P, n).matrix.isZero()


def testRbaShape(abelianZero):
    d0 = rbaDifferential(abelianZero, 0).matrix
    assert (d0.rows, d0.cols) == (3 + 1, 1)
    d2 = rbaDifferential(abelianZero, 2).matrix
    assert (d2.rows, d2.cols) == (3 + 1, 1 + 3)


def testSizeGuard(fixBRegular):
    cx = Complexes(fixBRegular, limit=5)
    with pytest.raises(SizeRefused):
        cx.delta(2)


def testUnverifiedRefused(fixBRegular):
    rep = Representation(fixBRegular.rep.algebra, 3, fixBRegular.rep.rho)
    with pytest.raises(ContractError):
        deltaMatrix(rep, 1)
    with pytest.raises(ContractError):
        Complexes(RBRepresentation(rep, fixBRegular.TM, fixBRegular.rb))
    with pytest.raises(ContractError):
        Complexes(fixBRegular).differential('cone', 1)


def testWeightedOperatorCoboundary(abelianFour):
    cx = Complexes(abelianFour)
    assert cx.delta(1).isZero()
    assert not cx.phi(1).isZero()
    assert cx.dimension('rba', 2) == 4 * 2 + 4 * 2
    assert cx.partial(1).isZero()
