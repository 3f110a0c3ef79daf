#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Constructions built from verified structures: adjoint and regular
# representations, derived bracket and action, semidirect products,
# direct sums, operator transformations and the brute-force operator
# search.
#
##

from itertools import combinations, product

from baxter.lib import (ConsistencyError, ContractError, Rational, SearchRefused,
                        logging)
from baxter.lib.defaults import defaults
from baxter.lib.linalg import Matrix, determinant, zero
from baxter.algebra.basic import (RBRepresentation, Representation,
                                  RotaBaxterStructure, ThreeLieAlgebra,
                                  isRotaBaxterMorphism, requireVerified,
                                  rotaBaxterDefect, verifyFundamentalIdentity,
                                  verifyRbRepresentation, verifyRepresentation,
                                  verifyRotaBaxter)


def _assertVerdict(verdict, what):
    if not verdict.ok:
        raise ConsistencyError('%s failed: %s' % (what, verdict.first()),
                               verdict.first().indexes)


def adjointAction(algebra):
    """ Tabulates x -> [e_i, e_j, x] without checking anything.

    """
    rho = {}
    for i, j in combinations(range(algebra.dim), 2):
        columns = [algebra.bracket(i, j, k) for k in range(algebra.dim)]
        rho[i, j] = Matrix.fromColumns(columns, algebra.dim)
    return Representation(algebra, algebra.dim, rho)


def regularAction(structure):
    """ Unverified (g, ad, T), as read from a "regular" file block.

    """
    return RBRepresentation(adjointAction(structure.algebra), structure.T, structure)


def adjointRepresentation(algebra):
    """ Returns the adjoint representation x -> [e_i, e_j, x].

    @param algebra verified ThreeLieAlgebra
    @return verified Representation on the algebra itself
    """
    requireVerified(algebra, 'algebra')
    rep = adjointAction(algebra)
    _assertVerdict(verifyRepresentation(rep), 'adjoint representation')
    return rep


def regularRepresentation(structure):
    """ Returns (g, ad, T), the regular representation of a structure.

    """
    requireVerified(structure, 'rota-baxter structure')
    rbrep = RBRepresentation(adjointRepresentation(structure.algebra),
                             structure.T, structure)
    _assertVerdict(verifyRbRepresentation(rbrep), 'regular representation')
    return rbrep


def trivialRepresentation(structure, mdim, TM=None):
    """ Returns the zero action on an m-dimensional module.

    @param structure verified RotaBaxterStructure
    @param mdim module dimension
    @keyparam TM module operator, zero when None
    """
    requireVerified(structure, 'rota-baxter structure')
    rep = Representation(structure.algebra, mdim, {})
    rep.verified = True
    if TM is None:
        TM = Matrix.zeros(mdim, mdim)
    rbrep = RBRepresentation(rep, TM, structure)
    _assertVerdict(verifyRbRepresentation(rbrep), 'trivial representation')
    return rbrep


def derivedBracket(structure):
    """ Returns g_T with [x,y,z]_T the inner sum of the Rota-Baxter relation.

    The result is checked to be a 3-Lie algebra on which T is again a
    Rota-Baxter operator of the same weight, and T is checked to be a
    morphism g_T -> g.

    @param structure verified RotaBaxterStructure
    @return verified ThreeLieAlgebra
    """
    requireVerified(structure, 'rota-baxter structure')
    algebra = structure.algebra
    unit = algebra.unit
    constants = {}
    for i, j, k in combinations(range(algebra.dim), 3):
        constants[i, j, k] = structure.derived(unit(i), unit(j), unit(k))
    derived = ThreeLieAlgebra(algebra.dim, constants, algebra.names)
    _assertVerdict(verifyFundamentalIdentity(derived), 'derived bracket identity')
    again = RotaBaxterStructure(derived, structure.T, structure.weight)
    _assertVerdict(verifyRotaBaxter(again), 'operator on derived bracket')
    morphism = isRotaBaxterMorphism(again, structure, structure.T)
    _assertVerdict(morphism, 'operator as a morphism')
    logging.debug('derived bracket has %s nonzero constants', len(derived.constants))
    return derived


def derivedStructure(structure):
    """ Returns (g_T, T) at the same weight, verified.

    """
    derived = RotaBaxterStructure(derivedBracket(structure), structure.T,
                                  structure.weight)
    _assertVerdict(verifyRotaBaxter(derived), 'derived structure')
    return derived


def derivedRepresentation(rbrep, derived=None):
    """ Returns (M, rho_T, T_M) over (g_T, T).

    @param rbrep verified RBRepresentation
    @keyparam derived precomputed derivedStructure of rbrep.rb
    @return verified RBRepresentation
    """
    requireVerified(rbrep, 'rota-baxter representation')
    if derived is None:
        derived = derivedStructure(rbrep.rb)
    unit = rbrep.rb.algebra.unit
    rho = {}
    for i, j in combinations(range(rbrep.dim), 2):
        rho[i, j] = rbrep.derivedAction(unit(i), unit(j))
    rep = Representation(derived.algebra, rbrep.mdim, rho)
    _assertVerdict(verifyRepresentation(rep), 'derived representation')
    result = RBRepresentation(rep, rbrep.TM, derived)
    _assertVerdict(verifyRbRepresentation(result), 'derived rota-baxter representation')
    return result


def semidirectProduct(rbrep):
    """ Returns the structure on g + M with the semidirect bracket.

    [x+u, y+v, z+w] = [x,y,z] + rho(x,y)w + rho(y,z)u + rho(z,x)v, with
    operator T + T_M.  Module indexes follow the algebra indexes.

    @param rbrep verified RBRepresentation
    @return verified RotaBaxterStructure of dimension d + m
    """
    requireVerified(rbrep, 'rota-baxter representation')
    d, m = rbrep.dim, rbrep.mdim
    algebra = rbrep.rb.algebra
    constants = {}
    for key, value in algebra.constants.items():
        constants[key] = tuple(value) + (zero, ) * m
    for (i, j), matrix in rbrep.rep.rho.items():
        for w in range(m):
            column = matrix.column(w)
            if any(column):
                constants[i, j, d + w] = (zero, ) * d + tuple(column)
    names = algebra.names + ['m%s' % (w + 1) for w in range(m)]
    total = ThreeLieAlgebra(d + m, constants, names)
    _assertVerdict(verifyFundamentalIdentity(total), 'semidirect bracket')
    structure = RotaBaxterStructure(
        total, Matrix.blockDiagonal([rbrep.rb.T, rbrep.TM]), rbrep.weight)
    _assertVerdict(verifyRotaBaxter(structure), 'semidirect operator')
    return structure


def directSumRepresentations(rbreps, structure=None):
    """ Returns the block-diagonal sum of representations of one structure.

    @param rbreps list of verified RBRepresentation instances
    @keyparam structure base structure; required when rbreps is empty
    @return verified RBRepresentation
    """
    rbreps = list(rbreps)
    if structure is None:
        if not rbreps:
            raise ContractError('an empty direct sum needs its base structure')
        structure = rbreps[0].rb
    for rbrep in rbreps:
        requireVerified(rbrep, 'rota-baxter representation')
        if rbrep.rb is not structure and not rbrep.rb.sameAs(structure):
            raise ContractError('representations are over different structures')
    mdim = sum(r.mdim for r in rbreps)
    rho = {}
    for i, j in combinations(range(structure.dim), 2):
        matrix = Matrix.blockDiagonal([r.rep.action(i, j) for r in rbreps])
        if mdim:
            rho[i, j] = matrix
    rep = Representation(structure.algebra, mdim, rho)
    _assertVerdict(verifyRepresentation(rep), 'direct sum representation')
    result = RBRepresentation(rep, Matrix.blockDiagonal([r.TM for r in rbreps]),
                              structure)
    _assertVerdict(verifyRbRepresentation(result), 'direct sum')
    return result


def scaleRepresentation(rbrep, factor):
    """ Returns (M, rho, c T_M) over (g, c T) at weight c w.

    """
    requireVerified(rbrep, 'rota-baxter representation')
    factor = Rational(factor)
    structure = transformOperator(rbrep.rb, 'scale', factor)
    result = RBRepresentation(rbrep.rep, rbrep.TM.scaled(factor), structure)
    _assertVerdict(verifyRbRepresentation(result), 'scaled representation')
    return result


def identityRepresentation(rep):
    """ Returns (M, rho, id) over (g, id) at weight -1.

    """
    requireVerified(rep, 'representation')
    structure = RotaBaxterStructure(rep.algebra, Matrix.identity(rep.dim), -1)
    _assertVerdict(verifyRotaBaxter(structure), 'identity operator')
    result = RBRepresentation(rep, Matrix.identity(rep.mdim), structure)
    _assertVerdict(verifyRbRepresentation(result), 'identity representation')
    return result


def automorphismDefect(algebra, psi):
    """ Returns the first triple where psi fails to preserve the bracket.

    """
    apply = psi.apply
    unit = algebra.unit
    for i, j, k in combinations(range(algebra.dim), 3):
        lhs = apply(algebra.bracket(i, j, k))
        rhs = algebra.bracketVectors(apply(unit(i)), apply(unit(j)), apply(unit(k)))
        if lhs != rhs:
            return (i, j, k)
    return None


def transformOperator(structure, mode, parameter=None):
    """ Builds a new Rota-Baxter operator from a verified one.

    @param structure verified RotaBaxterStructure
    @param mode 'scale', 'companion' or 'conjugate'
    @keyparam parameter scale factor, or the automorphism matrix to conjugate by
    @return verified RotaBaxterStructure
    """
    requireVerified(structure, 'rota-baxter structure')
    d = structure.dim
    w = structure.weight
    if mode == 'scale':
        factor = Rational(parameter)
        result = RotaBaxterStructure(structure.algebra, structure.T.scaled(factor),
                                     w * factor)
    elif mode == 'companion':
        result = RotaBaxterStructure(
            structure.algebra, Matrix.scalar(d, -w) - structure.T, w)
    elif mode == 'conjugate':
        psi = parameter
        if (psi.rows, psi.cols) != (d, d) or determinant(psi) == 0:
            raise ContractError('conjugating map must be an invertible %sx%s matrix'
                                % (d, d))
        triple = automorphismDefect(structure.algebra, psi)
        if triple is not None:
            raise ContractError('conjugating map is not an automorphism at %r'
                                % (triple, ))
        result = RotaBaxterStructure(structure.algebra,
                                     psi.inverse() * structure.T * psi, w)
    else:
        raise ContractError('unknown transformation %r' % (mode, ))
    _assertVerdict(verifyRotaBaxter(result), 'transformed operator')
    return result


def searchRotaBaxterOperators(algebra, weight, entries, cap=None):
    """ Enumerates every operator with entries from a finite set.

    @param algebra ThreeLieAlgebra; verified here if needed
    @param weight Rational weight
    @param entries finite iterable of Rationals
    @keyparam cap enumeration limit; defaults.searchCap when None
    @return list of Matrix instances passing the Rota-Baxter relation
    """
    if cap is None:
        cap = defaults.searchCap
    values = []
    for value in entries:
        value = Rational(value)
        if value not in values:
            values.append(value)
    d = algebra.dim
    required = len(values) ** (d * d)
    if required > cap:
        raise SearchRefused(required, cap)
    if not algebra.verified:
        verdict = verifyFundamentalIdentity(algebra)
        if not verdict.ok:
            raise ContractError('algebra fails the fundamental identity at %r'
                                % (verdict.first().indexes, ))
    weight = Rational(weight)
    found = []
    for entriesTuple in product(values, repeat=d * d):
        T = Matrix(d, d, entriesTuple)
        if rotaBaxterDefect(algebra, T, weight) is None:
            found.append(T)
    logging.debug('operator search: %s of %s candidates pass', len(found), required)
    return found

