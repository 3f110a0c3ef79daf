#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import json

from baxter.lib import ContractError, ParseError, formatRational, logging
from baxter.lib.defaults import defaults, modes
from baxter.algebra.basic import (RBRepresentation, Verdict, verifyStructure)
from baxter.algebra.advanced import regularRepresentation, searchRotaBaxterOperators
from baxter.models.cohomology import betti, lesConsistency
from baxter.models.deformation import infinitesimal, trivialize, verifyDeformation
from baxter.models.differentials import Complexes, chainMapCheck, squareZeroCheck
from baxter.models.extension import (ExtensionCocycle, buildExtension,
                                     extractCocycle, isoFromCohomologous)
from baxter.models.twoalgebra import (cocycleToSkeletal, crossedModuleToStrict,
                                      skeletalToCocycle, strictToCrossedModule,
                                      verify2Algebra, verifyCrossedModule,
                                      verifyRb2Algebra)
from baxter.session.builder import FileBuilder


def formatMatrix(matrix):
    return [[formatRational(v) for v in row] for row in matrix.rowsList()]


class Report(object):
    """ Everything one command produced, in a stable order.

    @param command the command line echo
    """
    def __init__(self, command):
        self.command = list(command)
        self.items = {}
        self.verdicts = []

    def __setitem__(self, key, value):
        self.items[key] = value

    def __getitem__(self, key):
        return self.items[key]

    def __contains__(self, key):
        return key in self.items

    def addVerdict(self, verdict, limit=defaults.violationLimit):
        self.verdicts.append(verdict.asDict(limit))

    @property
    def ok(self):
        return all(v['ok'] for v in self.verdicts)

    def asDict(self):
        data = dict(self.items)
        data['command'] = self.command
        data['verdicts'] = self.verdicts
        data['ok'] = self.ok and 'error' not in self.items
        return data

    def asJson(self):
        return json.dumps(self.asDict(), sort_keys=True, indent=2)

    def asText(self):
        lines = ['command: %s' % ' '.join(self.command)]
        for verdict in self.verdicts:
            state = 'true' if verdict['ok'] else 'false'
            lines.append('%s: %s' % (verdict['name'], state))
            for violation in verdict['violations']:
                text = '  %s at %s' % (violation['name'], tuple(violation['indexes']))
                if 'detail' in violation:
                    text += ' %s' % violation['detail']
                lines.append(text)
            hidden = verdict['violationCount'] - len(verdict['violations'])
            if hidden > 0:
                lines.append('  ... %s more' % hidden)
        for key in sorted(self.items):
            lines.extend(_textLines(key, self.items[key], ''))
        return '\n'.join(lines)


def _textLines(key, value, indent):
    if isinstance(value, dict):
        lines = ['%s%s:' % (indent, key)]
        for name in sorted(value):
            lines.extend(_textLines(name, value[name], indent + '  '))
        return lines
    if isinstance(value, list) and value and isinstance(value[0], dict):
        columns = sorted(value[0])
        lines = ['%s%s:' % (indent, key), '%s  %s' % (indent, '  '.join(columns))]
        for row in value:
            lines.append('%s  %s' % (indent, '  '.join(str(row.get(c)) for c in columns)))
        return lines
    return ['%s%s: %s' % (indent, key, json.dumps(value, sort_keys=True))]


class Session(object):
    """ Runs one command against its input files.

    @param options parsed command line namespace
    @param command command line echo for the report
    """
    def __init__(self, options, command):
        self.options = options
        self.builder = FileBuilder(options.maxDim)
        self.report = Report(command)

    def run(self):
        """ Dispatches to the cmd_ method of the chosen command.

        @return exit code, 0 when every verdict holds and 1 otherwise
        """
        name = self.options.command.replace('-', '_')
        action = getattr(self.options, 'action', None)
        if action:
            name = '%s_%s' % (name, action.replace('-', '_'))
        call = getattr(self, 'cmd_%s' % name)
        logging.debug('running %s', name)
        result = call()
        if result is None:
            result = 0 if self.report.ok else 1
        return result

    ##
    # helpers

    def load(self, path, expected, context=None):
        return self.builder.load(path, expected, context)

    def complexes(self, P):
        return Complexes(P, self.options.maxSize)

    def verified(self, item):
        """ Verifies a loaded structure or representation.

        @return item when verification succeeds, None otherwise
        """
        verdict = verifyStructure(item)
        if not verdict.ok:
            self.report.addVerdict(verdict)
            return None
        return item

    def representation(self, item):
        """ Returns an RBRepresentation for a verified item, regular for a
        bare structure.

        """
        if isinstance(item, RBRepresentation):
            return item
        return regularRepresentation(item)

    def structure(self, path):
        item = self.verified(self.load(path, 'algebra'))
        if item is None:
            return None
        return item.rb if isinstance(item, RBRepresentation) else item

    def emit(self, document):
        output = getattr(self.options, 'output', None)
        if output:
            with open(output, 'w') as handle:
                handle.write(self.builder.dumps(document))
            self.report['output'] = output
        else:
            self.report['document'] = document

    ##
    # commands

    def cmd_verify(self):
        item = self.load(self.options.file, 'algebra')
        self.report.addVerdict(verifyStructure(item))

    def cmd_cohomology(self):
        item = self.verified(self.load(self.options.file, 'algebra'))
        if item is None:
            return 1
        P = self.representation(item)
        cx = self.complexes(P)
        rows = []
        for n in range(self.options.maxDegree + 1):
            rows.append(betti(P, self.options.complex, n, cx).asDict(self.options.withBases))
        self.report['cohomology'] = rows
        if self.options.les:
            verdict, table = lesConsistency(P, self.options.maxDegree, cx)
            self.report.addVerdict(verdict)
            self.report['les'] = table

    def cmd_chainmap(self):
        item = self.verified(self.load(self.options.file, 'algebra'))
        if item is None:
            return 1
        P = self.representation(item)
        cx = self.complexes(P)
        nMax = self.options.maxDegree
        self.report.addVerdict(chainMapCheck(P, nMax, cx))
        if self.options.squares:
            for which in ('3lie', 'rbo', 'rba'):
                self.report.addVerdict(squareZeroCheck(P, which, nMax, cx))

    def cmd_deform(self):
        structure = self.structure(self.options.file)
        if structure is None:
            return 1
        D, mode = self.load(self.options.deformation, 'deformation', structure)
        verdict = verifyDeformation(D, mode)
        self.report.addVerdict(verdict)
        if not verdict.ok:
            return 1
        dump = self.builder.cochainEntries
        first = infinitesimal(D, mode)
        data = {'mode': mode, 'theta': dump(first.theta)}
        if mode == modes.pair:
            data['mu'] = dump(first.mu)
        self.report['infinitesimal'] = data
        if self.options.trivialize:
            E, obstruction = trivialize(D)
            if obstruction is not None:
                self.report['obstruction'] = {
                    'order': obstruction.order,
                    'mu': dump(obstruction.mu),
                    'theta': dump(obstruction.theta),
                }
                return 1
            self.report['equivalence'] = [formatMatrix(psi) for psi in E.psiTerms]

    def _cocycle(self, path, P, degree):
        f, theta = self.load(path, 'cocycle', P)
        if f.degree != degree:
            raise ParseError('expected a degree %s cocycle, found degree %s'
                             % (degree, f.degree), field='degree')
        return f, theta

    def _extensionInputs(self):
        item = self.verified(self.load(self.options.file, 'algebra'))
        if item is None:
            return None
        return self.representation(item)

    def cmd_ext_build(self):
        P = self._extensionInputs()
        if P is None:
            return 1
        cocycle = ExtensionCocycle(*self._cocycle(self.options.cocycle, P, 2))
        E, verdict = buildExtension(P, cocycle, self.complexes(P))
        self.report.addVerdict(verdict)
        self.emit(self.builder.dump_extension(E))

    def cmd_ext_extract(self):
        E = self.load(self.options.file, 'extension')
        for item in (E.total, E.base):
            if self.verified(item) is None:
                return 1
        verdict = E.validate()
        self.report.addVerdict(verdict)
        if not verdict.ok:
            return 1
        if self.options.section:
            s = self.load(self.options.section, 'section', E)
        else:
            s = E.canonicalSection()
        cocycle, P = extractCocycle(E, s)
        self.report['representation'] = self.builder.dump_algebra(P)
        self.emit(self.builder.dump_cocycle(cocycle.psi, cocycle.chi))

    def cmd_ext_iso(self):
        P = self._extensionInputs()
        if P is None:
            return 1
        c1 = ExtensionCocycle(*self._cocycle(self.options.first, P, 2))
        c2 = ExtensionCocycle(*self._cocycle(self.options.second, P, 2))
        gamma = self.load(self.options.gamma, 'cochain', P)
        if (gamma.degree, gamma.m) != (1, P.mdim):
            raise ParseError('gamma must be a degree 1 cochain with values in the module',
                             field='degree')
        zeta = isoFromCohomologous(P, c1, c2, gamma, self.complexes(P))
        self.report['zeta'] = formatMatrix(zeta)

    def cmd_twoalg_verify(self):
        A = self.load(self.options.file, 'twoalg')
        verdict = verify2Algebra(A.underlying)
        self.report.addVerdict(verdict)
        if verdict.ok:
            self.report.addVerdict(verifyRb2Algebra(A))

    def cmd_twoalg_to_cocycle(self):
        A = self.load(self.options.file, 'twoalg')
        f, theta, ok = skeletalToCocycle(A, self.options.maxSize)
        verdict = Verdict('degree 3 cocycle')
        if not ok:
            verdict.add('degree 3 cocycle', (3, ))
        self.report.addVerdict(verdict)
        self.emit(self.builder.dump_cocycle(f, theta))

    def cmd_twoalg_from_cocycle(self):
        P = self._extensionInputs()
        if P is None:
            return 1
        f, theta = self._cocycle(self.options.cocycle, P, 3)
        A = cocycleToSkeletal(P.rb, P, f, theta, self.complexes(P))
        self.emit(self.builder.dump_twoalg(A))

    def cmd_twoalg_to_crossed(self):
        A = self.load(self.options.file, 'twoalg')
        if not A.isStrict():
            raise ContractError('only strict 2-algebras give crossed modules')
        verdict = verify2Algebra(A.underlying).extend(verifyRb2Algebra(A))
        self.report.addVerdict(verdict)
        if not verdict.ok:
            return 1
        self.emit(self.builder.dump_crossed_module(strictToCrossedModule(A)))

    def cmd_twoalg_from_crossed(self):
        C = self.load(self.options.file, 'crossed-module')
        if self.verified(C.base) is None:
            return 1
        verdict = verifyCrossedModule(C)
        self.report.addVerdict(verdict)
        if not verdict.ok:
            return 1
        A, strict = crossedModuleToStrict(C)
        self.report.addVerdict(strict)
        self.emit(self.builder.dump_twoalg(A))

    def cmd_search_rb(self):
        item = self.load(self.options.file, 'algebra')
        structure = item.rb if isinstance(item, RBRepresentation) else item
        weight = self.options.weight
        if weight is None:
            weight = structure.weight
        found = searchRotaBaxterOperators(structure.algebra, weight,
                                          self.options.entries, self.options.cap)
        self.report['weight'] = formatRational(weight)
        self.report['entries'] = [formatRational(v) for v in self.options.entries]
        self.report['count'] = len(found)
        self.report['operators'] = [formatMatrix(T) for T in found]
        return 0 if found else 1
