#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Distributed under the terms of the GNU General Public License v2

__version__ = '0.3'
