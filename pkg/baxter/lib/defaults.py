#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

import logging


logLevel = logging.WARNING
logFormat = '%(asctime)s %(levelname)s %(message)s'


class defaults:
    """ Limits and switches shared by the library and the command line.

    """
    maxDegree = 4
    maxDim = 6
    maxCochainSize = 20000
    searchCap = 100000
    randomSeed = 20240117
    jsonOutput = False
    timing = False
    verbose = False
    violationLimit = 20


class complexes:
    threelie = '3lie'
    rbo = 'rbo'
    rba = 'rba'
    names = (threelie, rbo, rba)


class modes:
    pair = 'pair'
    operatorOnly = 'operator-only'
    names = (pair, operatorOnly)
