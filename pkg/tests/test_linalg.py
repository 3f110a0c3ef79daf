#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import random

import pytest
import sympy

from baxter.lib import ContractError, Rational
from baxter.lib.linalg import (Matrix, determinant, imageBasis, inSpan,
                               kernelBasis, rank, solve, unitVector, zeroVector)


def sympyMatrix(A):
    return sympy.Matrix(A.rows, A.cols,
                        [sympy.Rational(v.numerator, v.denominator) for v in A.entries])


def randomRational(rng):
    return Rational(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))


def randomMatrices(count, seed=7):
    rng = random.Random(seed)
    for _ in range(count):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        entries = [randomRational(rng) if rng.random() < 0.6 else 0
                   for _ in range(rows * cols)]
        yield Matrix(rows, cols, entries)


def testRankAgainstSympy():
    for A in randomMatrices(60):
        assert rank(A) == sympyMatrix(A).rank()


def testKernelAgainstSympy():
    for A in randomMatrices(60, seed=11):
        basis = kernelBasis(A)
        assert len(basis) == len(sympyMatrix(A).nullspace())
        for v in basis:
            assert A.apply(v) == zeroVector(A.rows)
        if basis:
            assert rank(Matrix.fromColumns(basis, A.cols)) == len(basis)


def testDeterminantAgainstSympy():
    rng = random.Random(3)
    for size in range(1, 6):
        for _ in range(8):
            A = Matrix(size, size, [randomRational(rng) for _ in range(size * size)])
            expected = sympyMatrix(A).det(method='bareiss')
            assert determinant(A) == Rational(int(expected.p), int(expected.q))


def testDeterminantWithSwap():
    A = Matrix.fromRows([[0, 1], [1, 0]])
    assert determinant(A) == -1
    assert determinant(Matrix.fromRows([[1, 2], [2, 4]])) == 0


def testSolve():
    A = Matrix.fromRows([[1, 2, 0], [0, 1, 1]])
    x = solve(A, (3, 2))
    assert A.apply(x) == (3, 2)
    assert solve(Matrix.fromRows([[1, 1], [2, 2]]), (1, 3)) is None
    with pytest.raises(ContractError):
        solve(A, (1, 2, 3))


def testSolveFractions():
    A = Matrix.fromRows([[2, 0], [0, 3]])
    assert solve(A, (1, 1)) == (Rational(1, 2), Rational(1, 3))


def testInverse():
    A = Matrix.fromRows([[2, 1], [1, 1]])
    assert A * A.inverse() == Matrix.identity(2)
    with pytest.raises(ContractError):
        Matrix.fromRows([[1, 2], [2, 4]]).inverse()


def testInSpan():
    vectors = [(1, 0, 1), (0, 1, 1)]
    assert inSpan(vectors, (2, 3, 5))
    assert not inSpan(vectors, (0, 0, 1))
    assert inSpan([], zeroVector(3))
    assert not inSpan([], unitVector(3, 0))


def testImageBasis():
    A = Matrix.fromRows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    basis = imageBasis(A)
    assert len(basis) == rank(A) == 2


def testEmptyShapes():
    A = Matrix.zeros(0, 3)
    assert rank(A) == 0
    assert len(kernelBasis(A)) == 3
    assert solve(A, ()) == zeroVector(3)


def testBlockAssembly():
    a = Matrix.identity(2)
    b = Matrix.zeros(2, 1)
    c = Matrix.fromRows([[5, 6]])
    d = Matrix.fromRows([[7]])
    M = Matrix.block([[a, b], [c, d]])
    assert M.rowsList() == [(1, 0, 0), (0, 1, 0), (5, 6, 7)]
    assert Matrix.blockDiagonal([a, d]) == Matrix.block([[a, b], [Matrix.zeros(1, 2), d]])


def testShapeChecks():
    with pytest.raises(ContractError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ContractError):
        Matrix.identity(2) * Matrix.identity(3)
    with pytest.raises(ContractError):
        Matrix.fromRows([[1, 2], [3]])
