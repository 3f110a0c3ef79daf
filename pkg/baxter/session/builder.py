#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# Reads and writes the JSON files described in baxter.session.schema.
#
# Loading validates the document against its schema, then dispatches on
# the kind to a load_<kind> method.  Loaded objects are never verified
# here.  The dump_<kind> methods write the canonical form: sorted keys,
# two-space indent, zero entries omitted from sparse data.
#
##

import json

from jsonschema import Draft7Validator

from baxter.lib import ContractError, ParseError, formatRational, logging, parseRational
from baxter.lib.linalg import Matrix, isZeroVector, zero
from baxter.algebra.basic import (RBRepresentation, Representation,
                                  RotaBaxterStructure, ThreeLieAlgebra)
from baxter.algebra.advanced import regularAction
from baxter.models.cochains import (Cochain, argumentKeys, canonicalKey, keyArgs,
                                    slotCount)
from baxter.models.deformation import TruncatedDeformation
from baxter.models.extension import AbelianExtension
from baxter.models.twoalgebra import CrossedModule, RB2Algebra, ThreeLie2Algebra
from baxter.session import schema


def _path(parts):
    return '.'.join(str(part) for part in parts)


class FileBuilder(object):
    """ Loads and dumps every file kind.

    @keyparam maxDim largest algebra dimension accepted, unlimited when None
    """
    def __init__(self, maxDim=None):
        self.maxDim = maxDim
        self.validators = dict((kind, Draft7Validator(document))
                               for kind, document in schema.schemas.items())
        self.rootValidator = Draft7Validator(schema.root)

    ##
    # loading

    def loads(self, text, expected=None, context=None):
        """ Parses one document.

        @param text JSON source
        @keyparam expected kind or sequence of kinds the caller accepts
        @keyparam context object the document is read against: the
                  structure for deformations, the representation for
                  cocycles and cochains
        @return the loaded object
        """
        try:
            data = json.loads(text)
        except (ValueError, ) as exc:
            raise ParseError(getattr(exc, 'msg', str(exc)), line=getattr(exc, 'lineno', None))
        self._validate(self.rootValidator, data)
        kind = data['kind']
        if expected is not None:
            kinds = (expected, ) if isinstance(expected, str) else tuple(expected)
            if kind not in kinds:
                raise ParseError('expected %s, found %r' % (' or '.join(kinds), kind),
                                 field='kind')
        self._validate(self.validators[kind], data)
        call = getattr(self, 'load_%s' % kind.replace('-', '_'))
        logging.debug('loading %s document', kind)
        try:
            return call(data, context)
        except (ContractError, ) as exc:
            raise ParseError(str(exc), field=kind)

    def load(self, source, expected=None, context=None):
        """ Parses one document from a path or an open file.

        Files are read as UTF-8; undecodable bytes are a ParseError.
        """
        try:
            if not hasattr(source, 'read'):
                with open(source, encoding='utf-8') as handle:
                    text = handle.read()
            else:
                text = source.read()
        except (UnicodeDecodeError, ) as exc:
            raise ParseError('input is not valid UTF-8: %s' % (exc.reason, ),
                             field='(file)')
        return self.loads(text, expected, context)

    def _validate(self, validator, data):
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
        if errors:
            error = errors[0]
            raise ParseError(error.message, field=_path(error.absolute_path) or '(root)')

    def _rational(self, text, field):
        try:
            return parseRational(text)
        except (ValueError, ) as exc:
            raise ParseError(str(exc), field=field)

    def _dimension(self, value, field):
        if self.maxDim is not None and value > self.maxDim:
            raise ParseError('dimension %s exceeds limit %s' % (value, self.maxDim),
                             field=field)
        return value

    def _vector(self, data, size, field):
        values = [zero] * size
        for key, text in data.items():
            position = int(key)
            if position >= size:
                raise ParseError('index %s out of range for length %s' % (position, size),
                                 field='%s.%s' % (field, key))
            values[position] = self._rational(text, '%s.%s' % (field, key))
        return tuple(values)

    def _matrix(self, rows, shape, field):
        height, width = shape
        if len(rows) != height or any(len(row) != width for row in rows):
            raise ParseError('expected a %sx%s matrix' % (height, width), field=field)
        return Matrix.fromRows(
            [[self._rational(text, '%s.%s.%s' % (field, i, j))
              for j, text in enumerate(row)] for i, row in enumerate(rows)], width)

    def _increasing(self, args, size, field):
        args = tuple(args)
        if any(i >= size for i in args):
            raise ParseError('index out of range for dimension %s' % size, field=field)
        if any(a >= b for a, b in zip(args, args[1:])):
            raise ParseError('index tuple %r is not strictly increasing' % (args, ),
                             field=field)
        return args

    def _bracket(self, block, field):
        dim = self._dimension(block['dim'], '%s.dim' % field if field else 'dim')
        prefix = '%s.' % field if field else ''
        constants = {}
        for k, entry in enumerate(block.get('bracket', [])):
            where = '%sbracket.%s' % (prefix, k)
            args = self._increasing(entry['args'], dim, where + '.args')
            if args in constants:
                raise ParseError('duplicate bracket entry %r' % (args, ), field=where)
            constants[args] = self._vector(entry['value'], dim, where + '.value')
        names = block.get('names')
        if names is not None and len(names) != dim:
            raise ParseError('expected %s basis names' % dim, field=prefix + 'names')
        return ThreeLieAlgebra(dim, constants, names)

    def _structure(self, block, field=''):
        algebra = self._bracket(block, field)
        prefix = '%s.' % field if field else ''
        dim = algebra.dim
        if 'T' in block:
            T = self._matrix(block['T'], (dim, dim), prefix + 'T')
        else:
            T = Matrix.zeros(dim, dim)
        weight = self._rational(block['weight'], prefix + 'weight')
        return RotaBaxterStructure(algebra, T, weight)

    def _action(self, entries, algebra, mdim, field):
        rho = {}
        for k, entry in enumerate(entries):
            where = '%s.%s' % (field, k)
            args = self._increasing(entry['args'], algebra.dim, where + '.args')
            if args in rho:
                raise ParseError('duplicate action entry %r' % (args, ), field=where)
            rho[args] = self._matrix(entry['matrix'], (mdim, mdim), where + '.matrix')
        return Representation(algebra, mdim, rho)

    def _cochain(self, entries, d, m, degree, field):
        values = {}
        for k, entry in enumerate(entries):
            where = '%s.%s' % (field, k)
            args = tuple(entry['args'])
            if len(args) != slotCount(degree):
                raise ParseError('degree %s entries take %s arguments'
                                 % (degree, slotCount(degree)), field=where + '.args')
            if any(i >= d for i in args):
                raise ParseError('index out of range for dimension %s' % d,
                                 field=where + '.args')
            sign, key = canonicalKey(args, degree)
            if sign != 1 or keyArgs(key, degree) != args:
                raise ParseError('arguments %r are not canonical: pairs and the final '
                                 'triple must be strictly increasing' % (args, ),
                                 field=where + '.args')
            if args in values:
                raise ParseError('duplicate entry %r' % (args, ), field=where)
            values[args] = self._vector(entry['value'], m, where + '.value')
        return Cochain.fromEntries(d, m, degree, values)

    def load_algebra(self, data, context=None):
        """ Returns a RotaBaxterStructure, or an RBRepresentation when the
        file carries a representation block.

        """
        structure = self._structure(data)
        block = data.get('representation')
        if block is None:
            return structure
        algebra = structure.algebra
        if block == 'regular':
            return regularAction(structure)
        mdim = self._dimension(block['mdim'], 'representation.mdim')
        rep = self._action(block.get('rho', []), algebra, mdim, 'representation.rho')
        if 'TM' in block:
            TM = self._matrix(block['TM'], (mdim, mdim), 'representation.TM')
        else:
            TM = Matrix.zeros(mdim, mdim)
        return RBRepresentation(rep, TM, structure)

    def load_deformation(self, data, context):
        """ Returns (TruncatedDeformation, mode) over the context structure.

        """
        if context is None:
            raise ContractError('deformations are read against a base structure')
        d = context.dim
        order = data['order']
        terms = data['terms']
        if len(terms) != order:
            raise ParseError('order %s needs %s terms, found %s'
                             % (order, order, len(terms)), field='terms')
        muTerms, tTerms = [], []
        for k, term in enumerate(terms):
            where = 'terms.%s' % k
            muTerms.append(self._cochain(term.get('mu', []), d, d, 2, where + '.mu'))
            if 'T' in term:
                tTerms.append(self._matrix(term['T'], (d, d), where + '.T'))
            else:
                tTerms.append(Matrix.zeros(d, d))
        return TruncatedDeformation(context, muTerms, tTerms), data.get('mode', 'pair')

    def load_cocycle(self, data, context):
        """ Returns (f, theta): a degree-n and a degree-(n-1) cochain over the
        context representation.

        """
        if context is None:
            raise ContractError('cocycles are read against a representation')
        d, m, n = context.dim, context.mdim, data['degree']
        f = self._cochain(data.get('f', []), d, m, n, 'f')
        theta = self._cochain(data.get('theta', []), d, m, n - 1, 'theta')
        return f, theta

    def load_cochain(self, data, context):
        if context is None:
            raise ContractError('cochains are read against an algebra dimension')
        d = context if isinstance(context, int) else context.dim
        m = self._dimension(data['m'], 'm')
        return self._cochain(data.get('entries', []), d, m, data['degree'], 'entries')

    def load_section(self, data, context=None):
        rows = data['matrix']
        width = len(rows[0]) if rows else 0
        if context is not None:
            shape = (context.d + context.m, context.d)
        else:
            shape = (len(rows), width)
        return self._matrix(rows, shape, 'matrix')

    def load_extension(self, data, context=None):
        total = self._structure(data['total'], 'total')
        base = self._structure(data['base'], 'base')
        d, size = base.dim, total.dim
        m = size - d
        if m < 0:
            raise ParseError('total space is smaller than the base', field='total.dim')
        TM = self._matrix(data['TM'], (m, m), 'TM')
        inclusion = self._matrix(data['inclusion'], (size, m), 'inclusion')
        projection = self._matrix(data['projection'], (d, size), 'projection')
        return AbelianExtension(total, inclusion, projection, base, TM)

    def load_twoalg(self, data, context=None):
        structure = self._structure(data['g0'], 'g0')
        n0 = structure.dim
        n1 = self._dimension(data['g1dim'], 'g1dim')
        S = self._action(data.get('action', []), structure.algebra, n1, 'action')
        dmap = self._matrix(data['d'], (n0, n1), 'd') if 'd' in data \
               else Matrix.zeros(n0, n1)
        l5 = self._cochain(data.get('l5', []), n0, n1, 3, 'l5')
        T1 = self._matrix(data['T1'], (n1, n1), 'T1') if 'T1' in data \
             else Matrix.zeros(n1, n1)
        T2 = self._cochain(data.get('T2', []), n0, n1, 2, 'T2')
        underlying = ThreeLie2Algebra(structure.algebra, S, dmap, l5)
        return RB2Algebra(underlying, structure.T, T1, T2, structure.weight)

    def load_crossed_module(self, data, context=None):
        base = self._structure(data['base'], 'base')
        g1 = self._bracket(data['g1'], 'g1')
        n0, n1 = base.dim, g1.dim
        S = self._action(data.get('action', []), base.algebra, n1, 'action')
        dmap = self._matrix(data['d'], (n0, n1), 'd') if 'd' in data \
               else Matrix.zeros(n0, n1)
        T1 = self._matrix(data['T1'], (n1, n1), 'T1') if 'T1' in data \
             else Matrix.zeros(n1, n1)
        return CrossedModule(base, g1, dmap, S, T1)

    ##
    # dumping

    def dumps(self, document):
        return json.dumps(document, sort_keys=True, indent=2) + '\n'

    def _dumpVector(self, vector):
        return dict(('%s' % i, formatRational(v)) for i, v in enumerate(vector) if v)

    def _dumpMatrix(self, matrix):
        return [[formatRational(v) for v in row] for row in matrix.rowsList()]

    def _dumpBracket(self, algebra):
        return [{'args': list(key), 'value': self._dumpVector(algebra.constants[key])}
                for key in sorted(algebra.constants)]

    def _dumpStructure(self, structure):
        return {
            'dim': structure.dim,
            'names': list(structure.algebra.names),
            'weight': formatRational(structure.weight),
            'bracket': self._dumpBracket(structure.algebra),
            'T': self._dumpMatrix(structure.T),
        }

    def _dumpAction(self, rep):
        return [{'args': list(key), 'matrix': self._dumpMatrix(rep.rho[key])}
                for key in sorted(rep.rho)]

    def cochainEntries(self, f):
        entries = []
        for key in argumentKeys(f.d, f.degree):
            value = f.value(key)
            if not isZeroVector(value):
                entries.append({'args': list(keyArgs(key, f.degree)),
                                'value': self._dumpVector(value)})
        return entries

    def dump_algebra(self, item):
        if isinstance(item, RBRepresentation):
            document = self._dumpStructure(item.rb)
            document['representation'] = {
                'mdim': item.mdim,
                'rho': self._dumpAction(item.rep),
                'TM': self._dumpMatrix(item.TM),
            }
        else:
            document = self._dumpStructure(item)
        document['kind'] = 'algebra'
        return document

    def dump_deformation(self, D, mode='pair'):
        return {
            'kind': 'deformation',
            'order': D.order,
            'mode': mode,
            'terms': [{'mu': self.cochainEntries(mu), 'T': self._dumpMatrix(T)}
                      for mu, T in zip(D.muTerms, D.tTerms)],
        }

    def dump_cocycle(self, f, theta):
        return {
            'kind': 'cocycle',
            'degree': f.degree,
            'f': self.cochainEntries(f),
            'theta': self.cochainEntries(theta),
        }

    def dump_cochain(self, f):
        return {
            'kind': 'cochain',
            'degree': f.degree,
            'm': f.m,
            'entries': self.cochainEntries(f),
        }

    def dump_section(self, matrix):
        return {'kind': 'section', 'matrix': self._dumpMatrix(matrix)}

    def dump_extension(self, E):
        return {
            'kind': 'extension',
            'total': self._dumpStructure(E.total),
            'base': self._dumpStructure(E.base),
            'inclusion': self._dumpMatrix(E.inclusion),
            'projection': self._dumpMatrix(E.projection),
            'TM': self._dumpMatrix(E.TM),
        }

    def dump_twoalg(self, A):
        G = A.underlying
        return {
            'kind': 'twoalg',
            'g0': self._dumpStructure(A.structure),
            'g1dim': G.n1,
            'd': self._dumpMatrix(G.dmap),
            'action': self._dumpAction(G.S),
            'l5': self.cochainEntries(G.l5),
            'T1': self._dumpMatrix(A.T1),
            'T2': self.cochainEntries(A.T2),
        }

    def dump_crossed_module(self, C):
        return {
            'kind': 'crossed-module',
            'base': self._dumpStructure(C.base),
            'g1': {
                'dim': C.g1.dim,
                'names': list(C.g1.names),
                'bracket': self._dumpBracket(C.g1),
            },
            'd': self._dumpMatrix(C.dmap),
            'action': self._dumpAction(C.S),
            'T1': self._dumpMatrix(C.T1),
        }
