#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# JSON schemas for the input and output files.
#
# Every file is one object with a "kind" at the root.  Indexes are
# 0-based, rationals are the strings "p", "-p" or "p/q", sparse vectors map
# index strings to rationals and matrices are lists of rows.  Ordering
# rules (increasing index tuples) are checked by the builder after schema
# validation so the diagnostics can name the offending entry.
#
##

rational = {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'}

index = {'type': 'integer', 'minimum': 0}

dimension = {'type': 'integer', 'minimum': 0}

sparseVector = {
    'type': 'object',
    'propertyNames': {'pattern': r'^\d+$'},
    'additionalProperties': rational,
}

matrix = {'type': 'array', 'items': {'type': 'array', 'items': rational}}

names = {'type': 'array', 'items': {'type': 'string'}}

bracketEntry = {
    'type': 'object',
    'required': ['args', 'value'],
    'additionalProperties': False,
    'properties': {
        'args': {'type': 'array', 'items': index, 'minItems': 3, 'maxItems': 3},
        'value': sparseVector,
    },
}

actionEntry = {
    'type': 'object',
    'required': ['args', 'matrix'],
    'additionalProperties': False,
    'properties': {
        'args': {'type': 'array', 'items': index, 'minItems': 2, 'maxItems': 2},
        'matrix': matrix,
    },
}

cochainEntry = {
    'type': 'object',
    'required': ['args', 'value'],
    'additionalProperties': False,
    'properties': {
        'args': {'type': 'array', 'items': index},
        'value': sparseVector,
    },
}

cochainEntries = {'type': 'array', 'items': cochainEntry}

bracketBlock = {
    'type': 'object',
    'required': ['dim'],
    'properties': {
        'dim': dimension,
        'names': names,
        'bracket': {'type': 'array', 'items': bracketEntry},
    },
}

structureBlock = {
    'type': 'object',
    'required': ['dim', 'weight'],
    'properties': {
        'dim': dimension,
        'names': names,
        'weight': rational,
        'bracket': {'type': 'array', 'items': bracketEntry},
        'T': matrix,
    },
}

representationBlock = {
    'oneOf': [
        {'type': 'string', 'enum': ['regular']},
        {
            'type': 'object',
            'required': ['mdim'],
            'additionalProperties': False,
            'properties': {
                'mdim': dimension,
                'rho': {'type': 'array', 'items': actionEntry},
                'TM': matrix,
            },
        },
    ],
}


def _kind(name, required, properties):
    properties = dict(properties)
    properties['kind'] = {'const': name}
    return {
        'type': 'object',
        'required': ['kind'] + list(required),
        'properties': properties,
        'additionalProperties': False,
    }


algebra = _kind('algebra', ['dim', 'weight'], {
    'dim': dimension,
    'names': names,
    'weight': rational,
    'bracket': {'type': 'array', 'items': bracketEntry},
    'T': matrix,
    'representation': representationBlock,
})

deformation = _kind('deformation', ['order', 'terms'], {
    'order': {'type': 'integer', 'minimum': 1},
    'mode': {'enum': ['pair', 'operator-only']},
    'terms': {
        'type': 'array',
        'items': {
            'type': 'object',
            'additionalProperties': False,
            'properties': {'mu': cochainEntries, 'T': matrix},
        },
    },
})

cocycle = _kind('cocycle', ['degree'], {
    'degree': {'type': 'integer', 'minimum': 1},
    'f': cochainEntries,
    'theta': cochainEntries,
})

cochain = _kind('cochain', ['degree', 'm'], {
    'degree': {'type': 'integer', 'minimum': 0},
    'm': dimension,
    'entries': cochainEntries,
})

section = _kind('section', ['matrix'], {
    'matrix': matrix,
})

extension = _kind('extension', ['total', 'base', 'inclusion', 'projection', 'TM'], {
    'total': structureBlock,
    'base': structureBlock,
    'inclusion': matrix,
    'projection': matrix,
    'TM': matrix,
})

twoalg = _kind('twoalg', ['g0', 'g1dim'], {
    'g0': structureBlock,
    'g1dim': dimension,
    'd': matrix,
    'action': {'type': 'array', 'items': actionEntry},
    'l5': cochainEntries,
    'T1': matrix,
    'T2': cochainEntries,
})

crossedModule = _kind('crossed-module', ['base', 'g1'], {
    'base': structureBlock,
    'g1': bracketBlock,
    'd': matrix,
    'action': {'type': 'array', 'items': actionEntry},
    'T1': matrix,
})

schemas = {
    'algebra': algebra,
    'deformation': deformation,
    'cocycle': cocycle,
    'cochain': cochain,
    'section': section,
    'extension': extension,
    'twoalg': twoalg,
    'crossed-module': crossedModule,
}

kindNames = sorted(schemas)

root = {
    'type': 'object',
    'required': ['kind'],
    'properties': {'kind': {'enum': kindNames}},
}
