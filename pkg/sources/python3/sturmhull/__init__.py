# vim: set filetype=python fileencoding=utf-8:
# -*- coding: utf-8 -*-

#============================================================================#
#                                                                            #
#  Licensed under the Apache License, Version 2.0 (the "License");           #
#  you may not use this file except in compliance with the License.          #
#  You may obtain a copy of the License at                                   #
#                                                                            #
#      http://www.apache.org/licenses/LICENSE-2.0                            #
#                                                                            #
#  Unless required by applicable law or agreed to in writing, software       #
#  distributed under the License is distributed on an "AS IS" BASIS,         #
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  #
#  See the License for the specific language governing permissions and       #
#  limitations under the License.                                            #
#                                                                            #
#============================================================================#


''' Exact one-dimensional aperiodic tilings and their hulls.

    Builds sturmian, cut-and-project, and substitution tilings with exact
    vertex positions in real quadratic fields; computes return modules,
    projections onto irrational tori, and Anderson-Putnam graphs; and
    decides strong orbit equivalence of sturmian tiling spaces through
    continued fractions. '''


__version__ = '1.0a202610180000'


from . import (
    apcomplex,
    cli,
    configuration,
    confrac,
    cps,
    equivalence,
    exactnum,
    exceptionality,
    exceptions,
    factories,
    hull,
    interception,
    module,
    nomenclature,
    rendering,
    serialization,
    substitution,
    validators,
    verification,
    words,
)
from .confrac import ContinuedFraction, ModularMatrix, cf_expand
from .equivalence import soe_tiling_spaces
from .exactnum import QuadraticNumber, parse_quadratic
from .module import Module, reclassify_module


reclassify_module( apcomplex )
reclassify_module( cli )
reclassify_module( configuration )
reclassify_module( confrac )
reclassify_module( cps )
reclassify_module( equivalence )
reclassify_module( exactnum )
reclassify_module( exceptionality )
reclassify_module( exceptions )
reclassify_module( factories )
reclassify_module( hull )
reclassify_module( interception )
reclassify_module( module )
reclassify_module( nomenclature )
reclassify_module( rendering )
reclassify_module( serialization )
reclassify_module( substitution )
reclassify_module( validators )
reclassify_module( verification )
reclassify_module( words )
reclassify_module( __name__ )
