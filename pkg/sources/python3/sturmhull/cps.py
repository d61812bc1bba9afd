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


''' Canonical cut-and-project scheme of the square lattice.

    The lattice point ``(i, j)`` projects to ``i + j*alpha`` on the line and
    to ``u = alpha - rho + j - (i + j)*alpha`` in internal space. A point is
    accepted when ``u`` lies in the window, the unit interval, with one end
    closed according to the window convention:

    * ``half_open_high``: ``0 <= u < 1``, which reads off the upper branch of
      the sturmian word;
    * ``half_open_low``: ``0 < u <= 1``, which reads off the lower branch.

    At ``rho = 0`` the two conventions disagree on ``(1, 0)`` and ``(0, 1)``:

    .. code-block:: python

        >>> from sturmhull.cps import CutProjectScheme, accept
        >>> from sturmhull.exactnum import parse_quadratic
        >>> alpha = parse_quadratic( 'sqrt(2) - 1' )
        >>> high = CutProjectScheme( alpha, 0, 'half_open_high' )
        >>> low = CutProjectScheme( alpha, 0, 'half_open_low' )
        >>> accept( high, ( 1, 0 ) ), accept( low, ( 1, 0 ) )
        (True, False)
        >>> accept( high, ( 0, 1 ) ), accept( low, ( 0, 1 ) )
        (False, True)
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
    from .exceptionality import our_exception_factory_provider
    from .hull import SturmianSource, Tiling
    from .validators import (
        validate_argument_class,
        validate_argument_quadratic,
    )
    from .words import (
        Branch,
        SturmianParams,
        Word,
        count_crossings,
        sturmian_block,
    )


class WindowConvention( _Enum ):
    ''' Which end of the window accepts boundary points. '''

    HalfOpenLow = 'half_open_low'
    HalfOpenHigh = 'half_open_high'


class CutProjectScheme( _ValueObject ):
    ''' Slope, intercept, and window convention of the canonical scheme.

        Tile lengths are normalized to 1 and alpha; the physical lengths
        differ by the global factor ``1/sqrt(1 + alpha**2)``, which only
        matters for drawing. '''

    __slots__ = ( 'alpha', 'rho', 'window_convention' )

    def __init__(
        self, alpha, rho, window_convention = WindowConvention.HalfOpenHigh
    ):
        try: window_convention = WindowConvention( window_convention )
        except ValueError:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'window_convention', CutProjectScheme,
                "'half_open_low' or 'half_open_high'" ) from None
        params = __.SturmianParams(
            alpha, rho, _branches[ window_convention ] )
        self._establish(
            alpha = params.alpha, rho = params.rho,
            window_convention = window_convention )

    @property
    def params( self ):
        ''' Sturmian parameters read off by the scheme. '''
        return __.SturmianParams(
            self.alpha, self.rho, _branches[ self.window_convention ] )


class VertexSet( _ValueObject ):
    ''' Accepted lattice points, sorted by projected position.

        Consecutive points differ by ``(1, 0)`` or ``(0, 1)``, so the
        ``first_index`` of the first point, ``i + j``, indexes them all. '''

    __slots__ = ( 'alpha', 'points', 'first_index' )

    def __init__( self, alpha, points, first_index = 0 ):
        self._establish(
            alpha = alpha, points = tuple( map( tuple, points ) ),
            first_index = first_index )

    def __len__( self ): return len( self.points )

    def __iter__( self ): return iter( self.points )

    @property
    def positions( self ):
        ''' Exact projected positions ``i + j*alpha``. '''
        return tuple( i + j * self.alpha for i, j in self.points )

    def gaps( self ):
        ''' Exact differences of consecutive positions. '''
        positions = self.positions
        return tuple(
            position_ - position
            for position, position_ in zip( positions, positions[ 1 : ] ) )


@_our_interceptor
def internal_coordinate( scheme, point ):
    ''' Internal-space coordinate of lattice point. '''
    __.validate_argument_class(
        scheme, CutProjectScheme, 'scheme', internal_coordinate )
    i, j = _validate_point( point, internal_coordinate )
    return scheme.alpha - scheme.rho + j - ( i + j ) * scheme.alpha


@_our_interceptor
def accept( scheme, point ):
    ''' Does the lattice point project into the window? '''
    __.validate_argument_class( scheme, CutProjectScheme, 'scheme', accept )
    coordinate = internal_coordinate( scheme, point )
    low, high = coordinate.sign( ), ( coordinate - 1 ).sign( )
    if WindowConvention.HalfOpenHigh is scheme.window_convention:
        return 0 <= low and 0 > high
    return 0 < low and 0 >= high


@_our_interceptor
def vertices_in_range( scheme, low, high ):
    ''' Accepted points with projected position in ``[low, high)``.

        Exactly one point is accepted on each line ``i + j = k``; its second
        coordinate counts the crossings of the sturmian word up to index
        ``k - 1``, and consecutive counts differ by the symbols. '''
    __.validate_argument_class(
        scheme, CutProjectScheme, 'scheme', vertices_in_range )
    low = __.validate_argument_quadratic( low, 'low', vertices_in_range )
    high = __.validate_argument_quadratic( high, 'high', vertices_in_range )
    if low > high:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'high', vertices_in_range, 'position not below low' )
    if low == high: return VertexSet( scheme.alpha, ( ) )
    scribe = __.acquire_scribe( __name__ )
    params = scheme.params
    source = __.SturmianSource( params, lattice = True )
    start = source.locate( low )
    if source.vertex( start ) < low: start += 1
    stop = source.locate( high )
    if source.vertex( stop ) < high: stop += 1
    column = __.count_crossings( params, start - 1 )
    points = [ ]
    symbols = __.sturmian_block( params, start, stop )
    for index, symbol in enumerate( symbols, start ):
        points.append( ( index - column, column ) )
        column += symbol
    scribe.debug(
        f"Scheme of slope {scheme.alpha} accepts {len( points )} points "
        f"in [{low}, {high})." )
    return VertexSet( scheme.alpha, points, start )


@_our_interceptor
def tiling_from_cps( scheme ):
    ''' Tiling whose vertices are the accepted points, origin at 0. '''
    __.validate_argument_class(
        scheme, CutProjectScheme, 'scheme', tiling_from_cps )
    return __.Tiling( __.SturmianSource( scheme.params, lattice = True ), 0 )


def gap_symbols( vertices ):
    ''' Word of symbols read off the gaps: 0 for 1 and 1 for alpha. '''
    symbols = [ ]
    for gap in vertices.gaps( ):
        if 1 == gap: symbols.append( 0 )
        elif vertices.alpha == gap: symbols.append( 1 )
        else:
            raise __.our_exception_factory_provider( 'invalid_state' )(
                f"Gap {gap} between accepted points is neither 1 "
                f"nor {vertices.alpha}.", __package__ )
    return __.Word( symbols, vertices.first_index )


_branches = {
    WindowConvention.HalfOpenHigh: __.Branch.Upper,
    WindowConvention.HalfOpenLow: __.Branch.Lower,
}


def _validate_point( point, invocation ):
    try: i, j = point
    except ( TypeError, ValueError ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'point', invocation, 'pair of integers' ) from None
    __.validate_argument_class( i, int, 'point', invocation )
    __.validate_argument_class( j, int, 'point', invocation )
    return i, j
