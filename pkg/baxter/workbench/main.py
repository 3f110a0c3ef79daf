#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

##
#
# The baxter command.
#
# Exit status is 0 when every verdict holds, 1 when one is falsified and
# 2 for usage, input or size-guard errors.  Logging goes to stderr and
# the report to stdout.
#
##

import sys
import time

from baxter.lib import (ConsistencyError, ContractError, ParseError, SearchRefused,
                        SizeRefused, logging)
from baxter.lib.defaults import complexes, defaults, logLevel
from baxter.lib.scripttools import (LocalParser, UsageError, addCommonOptions,
                                    checkDegree, checkEntries, checkPositive,
                                    checkRational)
from baxter.session import Session


def makeParser():
    """ Builds the argument parser with one subparser per command.

    """
    parser = LocalParser(prog='baxter',
                         description='Exact computations for Rota-Baxter 3-Lie algebras.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    sub = addCommonOptions(commands.add_parser(
        'verify', help='verify an algebra, operator and representation'))
    sub.add_argument('file')

    sub = addCommonOptions(commands.add_parser(
        'cohomology', help='cohomology dimensions of one complex'))
    sub.add_argument('file')
    sub.add_argument('--complex', choices=complexes.names, default=complexes.rba)
    sub.add_argument('--max-degree', dest='maxDegree', type=checkDegree,
                     default=defaults.maxDegree)
    sub.add_argument('--with-bases', dest='withBases', action='store_true')
    sub.add_argument('--les', action='store_true',
                     help='check the long exact sequence dimensions')

    sub = addCommonOptions(commands.add_parser(
        'chainmap', help='check that phi is a chain map'))
    sub.add_argument('file')
    sub.add_argument('--max-degree', dest='maxDegree', type=checkDegree,
                     default=defaults.maxDegree)
    sub.add_argument('--squares', action='store_true',
                     help='also check that every differential squares to zero')

    sub = addCommonOptions(commands.add_parser(
        'deform', help='verify and trivialize a truncated deformation'))
    sub.add_argument('file')
    sub.add_argument('deformation')
    sub.add_argument('--trivialize', action='store_true')

    ext = commands.add_parser('ext', help='abelian extensions')
    actions = ext.add_subparsers(dest='action', metavar='action')
    actions.required = True
    sub = addCommonOptions(actions.add_parser('build'))
    sub.add_argument('file')
    sub.add_argument('cocycle')
    sub.add_argument('--output')
    sub = addCommonOptions(actions.add_parser('extract'))
    sub.add_argument('file')
    sub.add_argument('--section')
    sub.add_argument('--output')
    sub = addCommonOptions(actions.add_parser('iso'))
    sub.add_argument('file')
    sub.add_argument('first')
    sub.add_argument('second')
    sub.add_argument('gamma')

    two = commands.add_parser('twoalg', help='3-Lie 2-algebras and crossed modules')
    actions = two.add_subparsers(dest='action', metavar='action')
    actions.required = True
    for name in ('verify', 'to-cocycle', 'to-crossed', 'from-crossed'):
        sub = addCommonOptions(actions.add_parser(name))
        sub.add_argument('file')
        sub.add_argument('--output')
    sub = addCommonOptions(actions.add_parser('from-cocycle'))
    sub.add_argument('file')
    sub.add_argument('cocycle')
    sub.add_argument('--output')

    sub = addCommonOptions(commands.add_parser(
        'search-rb', help='enumerate operators with entries from a finite set'))
    sub.add_argument('file')
    sub.add_argument('--weight', type=checkRational, default=None)
    sub.add_argument('--entries', type=checkEntries, default=checkEntries('-1,0,1'))
    sub.add_argument('--cap', type=checkPositive, default=defaults.searchCap)
    return parser


def main(argv=None):
    """ Runs one command.

    @keyparam argv argument list without the program name; sys.argv when None
    @return exit status
    """
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    try:
        options = makeParser().parse_args(argv)
    except (UsageError, ) as exc:
        sys.stderr.write('baxter: %s\n' % exc)
        return 2
    logging.getLogger().setLevel(logging.DEBUG if options.verbose else logLevel)
    session = Session(options, argv)
    started = time.time()
    try:
        status = session.run()
    except (ParseError, ContractError, SizeRefused, SearchRefused, IOError) as exc:
        session.report['error'] = {'type': exc.__class__.__name__, 'message': str(exc)}
        status = 2
    except (ConsistencyError, ) as exc:
        session.report['error'] = {
            'type': exc.__class__.__name__,
            'message': str(exc),
            'location': str(exc.location),
        }
        status = 1
    if options.timing:
        session.report['seconds'] = round(time.time() - started, 3)
    session.report['exit'] = status
    report = session.report
    sys.stdout.write((report.asJson() if options.json else report.asText()) + '\n')
    return status


if __name__ == '__main__':
    sys.exit(main())
