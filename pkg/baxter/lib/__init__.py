#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import logging
import re
from fractions import Fraction

from baxter.lib.defaults import logFormat, logLevel


logging.basicConfig(level=logLevel, format=logFormat)

Rational = Fraction
rationalPattern = re.compile(r'^-?\d+(/\d+)?$')


class ContractError(Exception):
    """ Raised when a caller breaks an operation's preconditions.

    """


class ConsistencyError(Exception):
    """ Raised when two computations that must agree do not.

    @param message description of the failed check
    @keyparam location first offending index or entry, if any
    """
    def __init__(self, message, location=None):
        Exception.__init__(self, message)
        self.location = location


class ParseError(Exception):
    """ Raised for malformed input files.

    @param message description
    @keyparam field dotted path to the offending field
    @keyparam line line number for syntax errors
    """
    def __init__(self, message, field=None, line=None):
        Exception.__init__(self, message)
        self.field = field
        self.line = line

    def __str__(self):
        text = Exception.__str__(self)
        if self.line is not None:
            text = 'line %s: %s' % (self.line, text)
        if self.field:
            text = '%s: %s' % (self.field, text)
        return text


class SearchRefused(Exception):
    """ Raised when an enumeration would exceed its cap.

    """
    def __init__(self, required, cap):
        Exception.__init__(
            self, 'enumeration of %s candidates exceeds cap %s' % (required, cap))
        self.required = required
        self.cap = cap


class SizeRefused(Exception):
    """ Raised when a cochain space is larger than the configured guard.

    """
    def __init__(self, size, limit):
        Exception.__init__(
            self, 'cochain space of size %s exceeds limit %s' % (size, limit))
        self.size = size
        self.limit = limit


def parseRational(text):
    """ Parses the strict "p", "-p" or "p/q" form.

    @param text string to parse
    @return Rational instance
    """
    if not isinstance(text, str) or not rationalPattern.match(text):
        raise ValueError('malformed rational: %r' % (text, ))
    if '/' in text and int(text.split('/')[1]) == 0:
        raise ValueError('zero denominator: %r' % (text, ))
    return Fraction(text)


def formatRational(value):
    """ Formats a Rational as "p" or "p/q".

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%s/%s' % (value.numerator, value.denominator)


def sortSign(indexes):
    """ Sorts a tuple of indexes and computes the permutation sign.

    @param indexes sequence of basis indexes
    @return (sign, sorted tuple); sign is 0 when an index repeats
    """
    items = list(indexes)
    if len(set(items)) != len(items):
        return 0, tuple(sorted(items))
    sign = 1
    ## insertion sort counting transpositions; tuples are at most three long
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j-1] > items[j]:
            items[j-1], items[j] = items[j], items[j-1]
            sign = -sign
            j -= 1
    return sign, tuple(items)
