#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import argparse

from baxter.lib import parseRational
from baxter.lib.defaults import defaults


def checkRational(value):
    try:
        return parseRational(value)
    except (ValueError, ):
        raise argparse.ArgumentTypeError('invalid rational: %r' % (value, ))


def checkEntries(value):
    """ Parses a comma separated entry set such as "-1,0,1".

    """
    items = [item.strip() for item in value.split(',') if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError('empty entry set: %r' % (value, ))
    entries = []
    for item in items:
        entry = checkRational(item)
        if entry not in entries:
            entries.append(entry)
    return entries


def checkDegree(value):
    try:
        degree = int(value)
    except (ValueError, ):
        raise argparse.ArgumentTypeError('invalid degree: %r' % (value, ))
    if degree < 0:
        raise argparse.ArgumentTypeError('negative degree: %r' % (value, ))
    return degree


def checkPositive(value):
    try:
        number = int(value)
    except (ValueError, ):
        raise argparse.ArgumentTypeError('invalid count: %r' % (value, ))
    if number < 1:
        raise argparse.ArgumentTypeError('count must be positive: %r' % (value, ))
    return number


class UsageError(Exception):
    """ Raised instead of exiting when the command line is malformed.

    """


class LocalParser(argparse.ArgumentParser):
    """ ArgumentParser that raises UsageError rather than calling sys.exit.

    """
    def error(self, message):
        raise UsageError(message)


def addCommonOptions(parser):
    """ Adds the switches shared by every subcommand.

    @param parser argparse parser or subparser
    @return parser
    """
    add = parser.add_argument
    add('--json', action='store_true', default=defaults.jsonOutput,
        help='write the report as JSON')
    add('--verbose', action='store_true', default=defaults.verbose,
        help='log progress at debug level on stderr')
    add('--timing', action='store_true', default=defaults.timing,
        help='include wall time in the report')
    add('--max-size', dest='maxSize', type=checkPositive,
        default=defaults.maxCochainSize,
        help='largest cochain space to build (default %(default)s)')
    add('--max-dim', dest='maxDim', type=checkPositive, default=defaults.maxDim,
        help='largest algebra dimension accepted (default %(default)s)')
    return parser
