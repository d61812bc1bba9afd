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


''' Decisions of strong orbit equivalence, with certificates.

    Sturmian tiling spaces of slopes alpha and beta are strongly orbit
    equivalent exactly when the slopes are conjugate under the modular
    group, which is decided by their continued fraction tails. The same
    criterion decides diffeomorphism of the irrational tori.

    .. code-block:: python

        >>> from sturmhull.equivalence import soe_tiling_spaces
        >>> from sturmhull.exactnum import parse_quadratic
        >>> golden = parse_quadratic( '(sqrt(5) - 1)/2' )
        >>> silver = parse_quadratic( 'sqrt(2) - 1' )
        >>> soe_tiling_spaces( golden, silver ).equivalent
        False
        >>> verdict = soe_tiling_spaces( golden, 1 - golden )
        >>> verdict.equivalent, str( verdict.witness )
        (True, '[[2, 1], [1, 0]]')
    '''


from enum import Enum as _Enum

from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from .configuration import acquire_scribe
    from .confrac import (
        IntegerMatrix,
        cf_equivalent,
        cf_expand,
        is_purely_periodic,
        mobius_apply,
    )
    from .exceptionality import our_exception_factory_provider
    from .substitution import is_pisot, perron, substitutive_representative
    from .validators import (
        validate_argument_class,
        validate_argument_irrationality,
        validate_argument_unit_interval,
    )


class TorusMapClass( _Enum ):
    ''' Kind of map between irrational tori induced by an integer matrix. '''

    Diffeomorphism = 'diffeomorphism'
    SmoothOnly = 'smooth-only'
    Neither = 'neither'


class EquivalenceVerdict( _ValueObject ):
    ''' Decision with its witness and the expansions it was read from.

        The witness is present exactly when the slopes are equivalent, and
        maps the first slope onto the second. '''

    __slots__ = (
        'equivalent', 'witness', 'route', 'alpha_expansion', 'beta_expansion' )

    def __init__(
        self, equivalent, witness, alpha_expansion, beta_expansion,
        route = 'cf_tails',
    ):
        self._establish(
            equivalent = equivalent, witness = witness, route = route,
            alpha_expansion = alpha_expansion,
            beta_expansion = beta_expansion )


class SubstitutiveCertificate( _ValueObject ):
    ''' Substitution tiling space equivalent to a sturmian one.

        Bundles the expansion of the slope, the equivalent slope beta with
        purely periodic expansion, the witness mapping the slope to beta,
        the substitution fixing the language of beta, its expansion factor,
        and whether that factor is a Pisot number. '''

    __slots__ = (
        'alpha', 'expansion', 'beta', 'beta_expansion', 'witness', 'rule',
        'eigenvalue', 'pisot' )

    def __init__( # pylint: disable=too-many-arguments
        self, alpha, expansion, beta, beta_expansion, witness, rule,
        eigenvalue, pisot
    ):
        self._establish(
            alpha = alpha, expansion = expansion, beta = beta,
            beta_expansion = beta_expansion, witness = witness, rule = rule,
            eigenvalue = eigenvalue, pisot = pisot )


@_our_interceptor
def soe_tiling_spaces( alpha, beta ):
    ''' Decides strong orbit equivalence of the tiling spaces of two slopes.

        Slopes are quadratic irrationals in ``(0, 1)``. '''
    for name, slope in ( ( 'alpha', alpha ), ( 'beta', beta ) ):
        slope = __.validate_argument_irrationality(
            slope, name, soe_tiling_spaces )
        __.validate_argument_unit_interval( slope, name, soe_tiling_spaces )
    scribe = __.acquire_scribe( __name__ )
    equivalent, witness = __.cf_equivalent( alpha, beta )
    verdict = EquivalenceVerdict(
        equivalent, witness, __.cf_expand( alpha ), __.cf_expand( beta ) )
    scribe.debug(
        f"Slopes {alpha} and {beta}: "
        f"{'equivalent' if equivalent else 'not equivalent'}." )
    return verdict


@_our_interceptor
def diffeo_criterion( matrix ):
    ''' Classifies the map of irrational tori induced by integer matrix.

        Determinant +1 or -1 gives a diffeomorphism; any other nonzero
        determinant gives a smooth map which is not invertible. '''
    __.validate_argument_class(
        matrix, __.IntegerMatrix, 'matrix', diffeo_criterion )
    determinant = matrix.determinant( )
    if 1 == abs( determinant ): return TorusMapClass.Diffeomorphism
    if 0 != determinant: return TorusMapClass.SmoothOnly
    return TorusMapClass.Neither


@_our_interceptor
def class_substitutive_witness( alpha ):
    ''' Certificate of a substitution tiling space in the class of alpha.

        The slope is reduced to its fractional part for the search of the
        representative; the witness relates alpha itself to beta. Every
        part of the certificate is checked exactly before it is returned.
        '''
    alpha = __.validate_argument_irrationality(
        alpha, 'alpha', class_substitutive_witness )
    scribe = __.acquire_scribe( __name__ )
    beta, rule = __.substitutive_representative( alpha - alpha.floor( ) )
    equivalent, witness = __.cf_equivalent( alpha, beta )
    beta_expansion = __.cf_expand( beta )
    data = __.perron( rule )
    pisot = __.is_pisot( data )
    claims = (
        ( equivalent and beta == __.mobius_apply( witness, alpha ),
          f"slope {beta} is not the image of {alpha}" ),
        ( __.is_purely_periodic( beta_expansion ),
          f"expansion {beta_expansion} is not purely periodic" ),
        ( pisot, f"expansion factor {data.eigenvalue} is not Pisot" ),
    )
    for valid, claim in claims:
        if valid: continue
        raise __.our_exception_factory_provider( 'certificate_failure' )(
            claim, class_substitutive_witness )
    scribe.debug( f"Slope {alpha} certified by {rule}." )
    return SubstitutiveCertificate(
        alpha, __.cf_expand( alpha ), beta, beta_expansion, witness, rule,
        data.eigenvalue, pisot )
