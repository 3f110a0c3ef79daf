#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import json
import random

import pytest

from baxter.lib import Rational
from baxter.lib.defaults import defaults
from baxter.lib.linalg import Matrix
from baxter.algebra.basic import (RotaBaxterStructure, ThreeLieAlgebra,
                                  verifyStructure)
from baxter.algebra.advanced import (derivedRepresentation, regularRepresentation,
                                     semidirectProduct, trivialRepresentation)


fixBConstants = {(0, 1, 2): (1, 0, 0)}

simpleFourConstants = {
    (0, 1, 2): (0, 0, 0, 1),
    (0, 1, 3): (0, 0, -1, 0),
    (0, 2, 3): (0, 1, 0, 0),
    (1, 2, 3): (-1, 0, 0, 0),
}


def makeStructure(dim, constants, T, weight):
    """ Builds and verifies a structure; T is a list of rows or None for zero.

    """
    algebra = ThreeLieAlgebra(dim, constants)
    T = Matrix.zeros(dim, dim) if T is None else Matrix.fromRows(T)
    structure = RotaBaxterStructure(algebra, T, weight)
    verdict = verifyStructure(structure)
    assert verdict.ok, verdict.asDict()
    return structure


def fixB(T=None, weight=-1):
    if T is None:
        T = Matrix.identity(3).rowsList()
    return makeStructure(3, fixBConstants, T, weight)


def rankOneRows():
    return [[0, 0, 1], [0, 0, 0], [0, 0, 0]]


def randomMatrix(rng, rows, cols, values=(-1, 0, 1)):
    return Matrix(rows, cols, [rng.choice(values) for _ in range(rows * cols)])


@pytest.fixture
def rng():
    return random.Random(defaults.randomSeed)


@pytest.fixture
def abelianZero():
    """ Abelian d = 3 with T = 0 and the zero module of dimension 1.

    """
    return trivialRepresentation(makeStructure(3, {}, None, 1), 1)


@pytest.fixture
def abelianRegular():
    return regularRepresentation(makeStructure(3, {}, None, 1))


@pytest.fixture
def abelianFour():
    T = [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]]
    structure = makeStructure(4, {}, T, Rational(1, 2))
    return trivialRepresentation(structure, 2, Matrix.fromRows([[1, 1], [0, 1]]))


@pytest.fixture
def fixBRegular():
    return regularRepresentation(fixB())


@pytest.fixture
def fixBTrivial():
    return trivialRepresentation(fixB(), 1, Matrix.fromRows([[2]]))


@pytest.fixture
def fixBZero():
    return regularRepresentation(makeStructure(3, fixBConstants, None, 1))


@pytest.fixture
def rankOne():
    return regularRepresentation(fixB(T=rankOneRows(), weight=0))


@pytest.fixture
def simpleFour():
    return regularRepresentation(makeStructure(4, simpleFourConstants, None, 1))


@pytest.fixture
def semidirect(fixBTrivial):
    return regularRepresentation(semidirectProduct(fixBTrivial))


@pytest.fixture
def derivedClosure(fixBRegular):
    return derivedRepresentation(fixBRegular)


smallFixtures = ['abelianZero', 'abelianRegular', 'fixBRegular', 'fixBTrivial',
                 'fixBZero', 'rankOne', 'derivedClosure']

# (fixture, highest degree checked)
largeFixtures = [('abelianFour', 3), ('simpleFour', 2), ('semidirect', 2)]


@pytest.fixture
def writeJson(tmp_path):
    """ Returns a function writing a document to a file under tmp_path.

    """
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document, indent=2))
        return str(path)
    return write
