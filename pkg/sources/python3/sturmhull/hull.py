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


''' Tilings of the line with exact geometry, and their hull.

    A tiling pairs an immutable source of tiles with the position of its
    origin. Sources index their tiles by integers; tile ``k`` spans from
    vertex ``k`` to vertex ``k + 1``. Only the tiles of a requested window
    are ever materialized. Positions handed to and returned by the
    operations of this module are in tiling coordinates, where the origin
    sits at 0.

    .. code-block:: python

        >>> from sturmhull.exactnum import parse_quadratic
        >>> from sturmhull.hull import delta_alpha, phi, psi, translate
        >>> from sturmhull.words import SturmianParams
        >>> params = SturmianParams( parse_quadratic( '(3 - sqrt(5))/2' ), 0 )
        >>> tiling = psi( params )
        >>> str( phi( tiling ).block( -3, 4 ) )
        '0100101'
        >>> str( delta_alpha( params ) )
        '1'
        >>> str( phi( translate( tiling, 1 ) ).block( -3, 4 ) )
        '1001010'

    Translation moves the origin forward: the tile which covered the point
    ``x`` of a tiling covers the point 0 of its translate by ``x``. '''


from enum import Enum as _Enum

from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from bisect import bisect_left, bisect_right
    from fractions import Fraction
    from functools import lru_cache
    from math import lcm

    from sympy.polys.domains import ZZ
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.normalforms import hermite_normal_form

    from .apcomplex import two_factors
    from .configuration import acquire_scribe
    from .exactnum import QuadraticNumber, surd
    from .exceptionality import our_exception_factory_provider
    from .exceptions import IncorrectData
    from .substitution import (
        SubstitutionRule,
        fixed_point_prefix,
        perron,
    )
    from .validators import (
        validate_argument_class,
        validate_argument_irrationality,
        validate_argument_positivity,
        validate_argument_quadratic,
    )
    from .words import (
        Branch,
        SturmianParams,
        Word,
        count_crossings,
        singular_index,
        sturmian_block,
        sturmian_symbol,
    )


class OriginTag( _Enum ):
    ''' Which of the two doubled origins a singular tiling projects to. '''

    BranchLow = 'branch_low'
    BranchHigh = 'branch_high'


#--------------------------------- Sources ----------------------------------#


class TilingSource( _ValueObject ):
    ''' Rule which produces the tiles of a bi-infinite tiling.

        Subclasses provide exact vertices, labels, and location of points,
        in the coordinates of the source. '''

    __slots__ = ( )

    @property
    def alphabet( self ):
        ''' Labels of the prototiles, in order. '''
        raise NotImplementedError

    def length_of( self, label ):
        ''' Exact length of the prototile of label. '''
        raise NotImplementedError

    def vertex( self, index ):
        ''' Exact position of vertex of index. '''
        raise NotImplementedError

    def labels( self, start, stop ):
        ''' Labels of tiles with indices in ``[start, stop)``. '''
        raise NotImplementedError

    def locate( self, position ):
        ''' Index k with ``vertex(k) <= position < vertex(k + 1)``. '''
        raise NotImplementedError

    def frame( self ):
        ''' Second element of a frame ``(1, x)`` for the vertex positions.

            Every vertex difference has rational coordinates in the frame.
            Returns ``None`` when all vertex differences are rational. '''
        raise NotImplementedError

    def canonical_form( self ):
        ''' Canonical source with the same tiles, and the shift to it.

            Vertex k of this source is vertex k of the canonical source plus
            the shift. '''
        return self, __.QuadraticNumber( 0 )

    def origin_tag( self ):
        ''' Tag of the doubled origin, for singular sources. '''
        return None

    def torus_reference( self ):
        ''' Position which projects to the zero class of the torus.

            Defaults to vertex 0. Sturmian sources use the intercept. '''
        return self.vertex( 0 )

    def tiles( self, start, stop ):
        ''' Tiles with indices in ``[start, stop)``.

            Triples of label, left vertex, and length, in source
            coordinates. '''
        position = self.vertex( start )
        tiles = [ ]
        for label in self.labels( start, stop ):
            length = self.length_of( label )
            tiles.append( ( label, position, length ) )
            position = position + length
        return tuple( tiles )

    def longest_length( self ):
        ''' Length of the longest prototile. '''
        return max( self.length_of( label ) for label in self.alphabet )


class SturmianSource( TilingSource ):
    ''' Tiles of lengths 1 and alpha, read off a sturmian word.

        Tile k carries symbol k of the word, with length 1 for symbol 0 and
        alpha for symbol 1. Vertex k is ``k - J(k)*(1 - alpha)``, where
        ``J(k)`` counts crossings up to index ``k - 1``. In the lattice frame
        these are the projections of the accepted lattice points; otherwise
        the positions are shifted so that vertex 0 sits at 0. '''

    __slots__ = ( 'params', 'lattice' )

    def __init__( self, params, lattice = False ):
        __.validate_argument_class(
            params, __.SturmianParams, 'params', SturmianSource )
        if not isinstance( lattice, bool ):
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'lattice', SturmianSource, 'boolean' )
        self._establish( params = params, lattice = lattice )

    @property
    def alphabet( self ): return ( 0, 1 )

    def length_of( self, label ):
        return __.QuadraticNumber( 1 ) if 0 == label else self.params.alpha

    def vertex( self, index ):
        alpha = self.params.alpha
        crossings = __.count_crossings( self.params, index - 1 )
        if not self.lattice:
            crossings -= __.count_crossings( self.params, -1 )
        return index - crossings * ( 1 - alpha )

    def labels( self, start, stop ):
        return __.sturmian_block( self.params, start, stop ).symbols

    def locate( self, position ):
        alpha = self.params.alpha
        mean = 1 - alpha + alpha * alpha
        estimate = int( float( position - self.vertex( 0 ) ) // float( mean ) )
        return _settle_index( self, position, estimate )

    def frame( self ): return self.params.alpha

    def canonical_form( self ):
        if not self.lattice: return self, __.QuadraticNumber( 0 )
        shift = -__.count_crossings( self.params, -1 ) * (
            1 - self.params.alpha )
        return SturmianSource( self.params ), shift

    def origin_tag( self ):
        if None is __.singular_index( self.params ): return None
        if __.Branch.Upper is self.params.branch: return OriginTag.BranchHigh
        return OriginTag.BranchLow

    def torus_reference( self ):
        return self.params.rho


class SubstitutionSource( TilingSource ):
    ''' Bi-infinite fixed point of a power of a substitution.

        Tiles carry the natural lengths of the Perron data, which must be
        exact. The fixed point is grown around a legal pair of letters: the
        right seed starts tile 0 and the left seed ends tile -1. '''

    __slots__ = ( 'rule', 'lengths', 'left_seed', 'right_seed' )

    def __init__( self, rule ):
        __.validate_argument_class(
            rule, __.SubstitutionRule, 'rule', SubstitutionSource )
        data = __.perron( rule )
        if not data.exact:
            raise __.our_exception_factory_provider( 'inexact_data' )(
                'rule', SubstitutionSource )
        left_seed, right_seed = _choose_seeds( rule )
        self._establish(
            rule = rule, lengths = data.left_eigenvector,
            left_seed = left_seed, right_seed = right_seed )

    @property
    def alphabet( self ): return self.rule.alphabet

    def length_of( self, label ):
        return self.lengths[ self.rule.alphabet.index( label ) ]

    def vertex( self, index ):
        if 0 <= index:
            return _grow_side( self, False, index + 1 )[ 1 ][ index ]
        return -_grow_side( self, True, -index + 1 )[ 1 ][ -index ]

    def labels( self, start, stop ):
        symbols = [ ]
        if 0 > start:
            left, _ = _grow_side( self, True, -start )
            symbols.extend( reversed( left[ max( 0, -stop ) : -start ] ) )
        if 0 < stop:
            right, _ = _grow_side( self, False, stop )
            symbols.extend( right[ max( 0, start ) : stop ] )
        return tuple( symbols )

    def locate( self, position ):
        leftward = 0 > position.sign( )
        target = -position if leftward else position
        count = 64
        while True:
            _, positions = _grow_side( self, leftward, count )
            if positions[ -1 ] > target: break
            count *= 2
        if leftward: return -__.bisect_left( positions, target )
        return __.bisect_right( positions, target ) - 1

    def frame( self ):
        if 2 != len( self.lengths ) or self.lengths[ 1 ].is_rational( ):
            return None
        return self.lengths[ 1 ]


class PeriodicSource( TilingSource ):
    ''' Repetition of a finite pattern of labelled tiles. '''

    __slots__ = ( 'pattern', 'lengths' )

    def __init__( self, pattern, lengths ):
        pattern = tuple( pattern )
        lengths = tuple(
            __.validate_argument_quadratic( length, 'lengths', PeriodicSource )
            for length in lengths )
        if not pattern or len( pattern ) != len( lengths ):
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'lengths', PeriodicSource, 'one length per tile of pattern' )
        table = { }
        for label, length in zip( pattern, lengths ):
            known = table.setdefault( label, length )
            if 0 >= length.sign( ) or known != length:
                raise __.our_exception_factory_provider(
                    'argument_validation' )(
                        'lengths', PeriodicSource,
                        'one positive length per label' )
        self._establish( pattern = pattern, lengths = lengths )

    @property
    def alphabet( self ): return tuple( dict.fromkeys( self.pattern ) )

    @property
    def period( self ):
        ''' Total length of the pattern. '''
        return sum( self.lengths, __.QuadraticNumber( 0 ) )

    def length_of( self, label ):
        return self.lengths[ self.pattern.index( label ) ]

    def vertex( self, index ):
        repeats, rest = divmod( index, len( self.pattern ) )
        return repeats * self.period + _accumulate( self.lengths )[ rest ]

    def labels( self, start, stop ):
        size = len( self.pattern )
        return tuple(
            self.pattern[ index % size ] for index in range( start, stop ) )

    def locate( self, position ):
        period = self.period
        repeats = ( position / period ).floor( )
        rest = position - repeats * period
        positions = _accumulate( self.lengths )
        return (
            repeats * len( self.pattern )
            + __.bisect_right( positions, rest ) - 1 )

    def frame( self ):
        for length in self.lengths:
            if not length.is_rational( ): return __.surd( length.radicand )
        return None


#--------------------------------- Tilings ----------------------------------#


class Tiling( _ValueObject ):
    ''' Source of tiles together with the source position of the origin. '''

    __slots__ = ( 'source', 'origin' )

    def __init__( self, source, origin = 0 ):
        __.validate_argument_class( source, TilingSource, 'source', Tiling )
        origin = __.validate_argument_quadratic( origin, 'origin', Tiling )
        self._establish( source = source, origin = origin )

    @property
    def labels( self ):
        ''' Label alphabet. '''
        return self.source.alphabet

    @property
    def origin_index( self ):
        ''' Index of the tile which contains the origin. '''
        return self.source.locate( self.origin )

    @property
    def origin_offset( self ):
        ''' Position of the origin, measured from the left vertex of its tile.
        '''
        return self.origin - self.source.vertex( self.origin_index )


class Tile( _ValueObject ):
    ''' Labelled closed interval. '''

    __slots__ = ( 'label', 'left', 'length' )

    def __init__( self, label, left, length ):
        self._establish( label = label, left = left, length = length )

    @property
    def right( self ):
        ''' Right vertex. '''
        return self.left + self.length


class Patch( _ValueObject ):
    ''' Finite run of consecutive tiles. '''

    __slots__ = ( 'tiles', )

    def __init__( self, tiles ):
        tiles = tuple( tiles )
        for tile in tiles:
            __.validate_argument_class( tile, Tile, 'tiles', Patch )
        for tile, tile_ in zip( tiles, tiles[ 1 : ] ):
            if tile.right == tile_.left: continue
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'tiles', Patch, 'consecutive tiles' )
        self._establish( tiles = tiles )

    def __len__( self ): return len( self.tiles )

    def __iter__( self ): return iter( self.tiles )

    @property
    def labels( self ):
        ''' Labels of the tiles, in order. '''
        return tuple( tile.label for tile in self.tiles )

    def shifted( self, displacement ):
        ''' Same tiles, moved by displacement. '''
        return Patch(
            Tile( tile.label, tile.left + displacement, tile.length )
            for tile in self.tiles )


class LabelSequence( _ValueObject ):
    ''' Label sequence of a tiling, indexed from the tile of the origin.

        The sequence is bi-infinite; blocks are realized on demand. '''

    __slots__ = ( 'source', 'index', 'offset' )

    def __init__( self, source, index, offset ):
        self._establish( source = source, index = index, offset = offset )

    def block( self, start, stop ):
        ''' Labels of relative indices in ``[start, stop)``, as a word. '''
        __.validate_argument_class( start, int, 'start', LabelSequence.block )
        __.validate_argument_class( stop, int, 'stop', LabelSequence.block )
        if stop < start:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'stop', LabelSequence.block, 'index not below start' )
        return __.Word(
            self.source.labels( self.index + start, self.index + stop ),
            start )


@_our_interceptor
def translate( tiling, displacement ):
    ''' Tiling with origin moved forward by displacement. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', translate )
    displacement = __.validate_argument_quadratic(
        displacement, 'displacement', translate )
    return Tiling( tiling.source, tiling.origin + displacement )


@_our_interceptor
def window( tiling, low, high ):
    ''' Patch of all tiles which meet the closed interval ``[low, high]``. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', window )
    low = __.validate_argument_quadratic( low, 'low', window )
    high = __.validate_argument_quadratic( high, 'high', window )
    if low > high:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'high', window, 'position not below low' )
    source, origin = tiling.source, tiling.origin
    start = source.locate( origin + low )
    if source.vertex( start ) == origin + low: start -= 1
    stop = source.locate( origin + high ) + 1
    return Patch(
        Tile( label, left - origin, length )
        for label, left, length in source.tiles( start, stop ) )


@_our_interceptor
def vertex_patch( tiling, index = 0, size = 1 ):
    ''' Patch of size tiles from the vertex of relative index.

        Relative index 0 is the left vertex of the tile of the origin. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', vertex_patch )
    __.validate_argument_class( index, int, 'index', vertex_patch )
    __.validate_argument_positivity( size, 'size', vertex_patch )
    start = tiling.origin_index + index
    return Patch(
        Tile( label, left - tiling.origin, length )
        for label, left, length in tiling.source.tiles(
            start, start + size ) )


#--------------------------------- Metric -----------------------------------#


class DistanceBounds( _ValueObject ):
    ''' Rational interval certainly containing a distance. '''

    __slots__ = ( 'low', 'high' )

    def __init__( self, low, high ):
        self._establish( low = __.Fraction( low ), high = __.Fraction( high ) )

    def width( self ):
        ''' Length of the interval. '''
        return self.high - self.low

    def __contains__( self, value ): return self.low <= value <= self.high


@_our_interceptor
def metric_d( tiling, tiling_, tolerance ):
    ''' Bounds on the distance between two tilings, within tolerance.

        Two tilings are close at scale epsilon when translates of each, by
        less than ``epsilon/2``, agree on the open ball of radius
        ``1/epsilon`` about the origin. Closeness at a given scale is decided
        exactly: agreement on a ball containing a vertex forces a vertex
        alignment, and there are finitely many alignments to try. The
        distance, the least scale of closeness, is then bracketed by
        bisection. The work of each test grows with ``1/epsilon``, so tilings
        at distance 0 given by different sources are slow to separate. Both
        tilings must have the same label alphabet. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', metric_d )
    __.validate_argument_class( tiling_, Tiling, 'tiling_', metric_d )
    __.validate_argument_class(
        tolerance, ( int, __.Fraction ), 'tolerance', metric_d )
    if 0 >= tolerance:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'tolerance', metric_d, 'positive exact rational' )
    if frozenset( tiling.labels ) != frozenset( tiling_.labels ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'tiling_', metric_d, 'tiling over the alphabet of the first' )
    scribe = __.acquire_scribe( __name__ )
    displacement = _displacement_between( tiling, tiling_ )
    low, high = __.Fraction( 0 ), __.Fraction( 1 )
    while not _are_close( tiling, tiling_, high, displacement ):
        low, high = high, 2 * high
        if 64 < high:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'tiling_', metric_d,
                'tiling which some label arrangement of the first matches' )
    while tolerance < high - low:
        middle = ( low + high ) / 2
        if _are_close( tiling, tiling_, middle, displacement ): high = middle
        else: low = middle
        scribe.debug( f"Distance bracketed in [{low}, {high}]." )
    if None is not displacement and displacement.is_rational( ):
        high = min( high, abs( displacement.rat_part ) )
    return DistanceBounds( low, high )


#--------------------------- Returns and the Torus --------------------------#


class ReturnModule( _ValueObject ):
    ''' Canonical basis of a module of return vectors.

        Generators are given with their coordinates in the frame
        ``(1, alpha)``, or ``(1,)`` when no alpha is involved. The
        coordinate vectors are the columns of a Hermite normal form. '''

    __slots__ = ( 'generators', 'alpha', 'coordinates' )

    def __init__( self, generators, alpha, coordinates ):
        self._establish(
            generators = tuple( generators ), alpha = alpha,
            coordinates = tuple( map( tuple, coordinates ) ) )

    def rank( self ):
        ''' Number of generators. '''
        return len( self.generators )

    def reduce( self, value ):
        ''' Canonical representative of the class of value.

            Returns the representative and its coordinates in the basis, each
            in ``[0, 1)``. Full-rank modules reduce rational frame
            coordinates; a single generator reduces the exact quotient. '''
        value = __.validate_argument_quadratic(
            value, 'value', ReturnModule.reduce )
        rank = self.rank( )
        if 0 == rank: return value, ( )
        if 1 == rank:
            generator = self.generators[ 0 ]
            quotient = value / generator
            cell = quotient - quotient.floor( )
            return cell * generator, ( cell, )
        first, second = _frame_coordinates(
            value, self.alpha, ReturnModule.reduce )
        ( pivot, _ ), ( upper, lower ) = self.coordinates
        second_cell = second / lower
        first_cell = ( first - upper * second_cell ) / pivot
        cells = tuple(
            cell - cell.__floor__( ) for cell in ( first_cell, second_cell ) )
        representative = sum(
            ( cell * generator
              for cell, generator in zip( cells, self.generators ) ),
            __.QuadraticNumber( 0 ) )
        return representative, cells


class TorusPoint( _ValueObject ):
    ''' Class of a position modulo a return module.

        Coordinates are those of the representative in the module basis.
        The origin tag is set only on the zero class of a singular tiling. '''

    __slots__ = ( 'representative', 'coordinates', 'origin_tag', 'module' )

    def __init__( self, representative, coordinates, origin_tag, module ):
        self._establish(
            representative = representative,
            coordinates = tuple( coordinates ),
            origin_tag = origin_tag, module = module )

    def is_zero( self ):
        ''' Is this the class of 0? '''
        return all( 0 == coordinate for coordinate in self.coordinates )

    def translate( self, displacement ):
        ''' Class moved by displacement. '''
        representative, coordinates = self.module.reduce(
            self.representative + displacement )
        point = TorusPoint( representative, coordinates, None, self.module )
        return TorusPoint(
            representative, coordinates,
            self.origin_tag if point.is_zero( ) else None, self.module )


@_our_interceptor
def return_vectors( tiling, patch, radius ):
    ''' Displacements of length at most radius which carry patch onto itself.

        The patch must occur in the tiling at its stated position. Every
        returned displacement moves it onto a copy with equal labels and
        equal exact lengths. Always includes 0. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', return_vectors )
    __.validate_argument_class( patch, Patch, 'patch', return_vectors )
    radius = __.validate_argument_quadratic( radius, 'radius', return_vectors )
    if 0 >= radius.sign( ) or not len( patch ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'radius', return_vectors, 'positive radius and nonempty patch' )
    source, origin = tiling.source, tiling.origin
    anchor = origin + patch.tiles[ 0 ].left
    index = source.locate( anchor )
    size = len( patch )
    found = Patch(
        Tile( label, left - origin, length )
        for label, left, length in source.tiles( index, index + size ) )
    if found != patch:
        raise __.our_exception_factory_provider( 'absent_patch' )(
            return_vectors )
    start = source.locate( anchor - radius )
    stop = source.locate( anchor + radius ) + 1
    labels = source.labels( start, stop + size )
    wanted = patch.labels
    vectors = [ ]
    position = source.vertex( start )
    for offset in range( stop - start ):
        displacement = position - anchor
        if (    labels[ offset : offset + size ] == wanted
            and abs( displacement ) <= radius
        ): vectors.append( displacement )
        position = position + source.length_of( labels[ offset ] )
    return tuple( vectors )


@_our_interceptor
def return_module( vectors, alpha = None ):
    ''' Canonical basis of the integer span of vectors.

        Without alpha, vectors must be rational. With alpha, vectors are
        split along the frame ``(1, alpha)``. Coordinates are scaled to
        integers and put in Hermite normal form. '''
    vectors = tuple(
        __.validate_argument_quadratic( vector, 'vectors', return_module )
        for vector in vectors )
    if None is not alpha:
        alpha = __.validate_argument_irrationality(
            alpha, 'alpha', return_module )
    elif not all( vector.is_rational( ) for vector in vectors ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'vectors', return_module, 'rational vectors without alpha' )
    scribe = __.acquire_scribe( __name__ )
    columns = [
        _frame_coordinates( vector, alpha, return_module )
        for vector in vectors ]
    columns = [ column for column in columns if any( column ) ]
    if not columns: return ReturnModule( ( ), alpha, ( ) )
    scale = __.lcm( *(
        coordinate.denominator
        for column in columns for coordinate in column ) )
    height = len( columns[ 0 ] )
    matrix = __.DomainMatrix(
        [ [ __.ZZ( int( column[ row ] * scale ) ) for column in columns ]
          for row in range( height ) ],
        ( height, len( columns ) ), __.ZZ )
    normal = __.hermite_normal_form( matrix ).to_Matrix( )
    rank = normal.shape[ 1 ]
    coordinates = tuple(
        tuple(
            __.Fraction( int( normal[ row, column ] ), scale )
            for row in range( height ) )
        for column in range( rank ) )
    generators = tuple(
        _frame_value( coordinate, alpha ) for coordinate in coordinates )
    scribe.debug(
        f"Return module of {len( vectors )} vectors has basis "
        f"{', '.join( map( str, generators ) )}." )
    return ReturnModule( generators, alpha, coordinates )


@_our_interceptor
def torus_project( tiling, module ):
    ''' Class of the origin's location modulo the return module.

        The location is measured from the reference position of the source:
        a vertex, or the intercept for sturmian sources, so that sturmian
        tilings of intercepts outside one coset of the module land in
        distinct classes. The module should contain every vertex difference
        of the tiling. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', torus_project )
    __.validate_argument_class(
        module, ReturnModule, 'module', torus_project )
    representative, coordinates = module.reduce(
        tiling.origin - tiling.source.torus_reference( ) )
    point = TorusPoint( representative, coordinates, None, module )
    if not point.is_zero( ): return point
    return TorusPoint(
        representative, coordinates, tiling.source.origin_tag( ), module )


#--------------------------- Sturmian Dictionary ----------------------------#


@_our_interceptor
def phi( tiling ):
    ''' Label sequence of tiling, forgetting tile lengths.

        Index 0 is the tile of the origin; the offset of the origin within
        that tile is kept as alignment data. '''
    __.validate_argument_class( tiling, Tiling, 'tiling', phi )
    return LabelSequence(
        tiling.source, tiling.origin_index, tiling.origin_offset )


@_our_interceptor
def psi( params ):
    ''' Tiling of a sturmian word, with origin on the left vertex of tile 0.
    '''
    __.validate_argument_class( params, __.SturmianParams, 'params', psi )
    return Tiling( SturmianSource( params ), 0 )


@_our_interceptor
def delta_alpha( params ):
    ''' Length of the tile of symbol 0: 1 for symbol 0, alpha for symbol 1.

        Translating the tiling of a word by this length gives the tiling of
        its shift. '''
    __.validate_argument_class(
        params, __.SturmianParams, 'params', delta_alpha )
    if 0 == __.sturmian_symbol( params, 0 ): return __.QuadraticNumber( 1 )
    return params.alpha


@_our_interceptor
def translation_cocycle( tiling, displacement ):
    ''' Signed count of vertices crossed by the origin over displacement.

        The label sequence of the translate is the label sequence of the
        tiling, shifted by this count. '''
    __.validate_argument_class(
        tiling, Tiling, 'tiling', translation_cocycle )
    displacement = __.validate_argument_quadratic(
        displacement, 'displacement', translation_cocycle )
    source = tiling.source
    return (
        source.locate( tiling.origin + displacement )
        - source.locate( tiling.origin ) )


#--------------------------------- Helpers ----------------------------------#


def _accumulate( lengths ):
    positions = [ __.QuadraticNumber( 0 ) ]
    for length in lengths: positions.append( positions[ -1 ] + length )
    return tuple( positions )


def _align_vertices( tiling, tiling_, radius, slack, epsilon ):
    ''' Does some vertex alignment make the tilings agree on a ball? '''
    reach = radius + slack
    source, source_ = tiling.source, tiling_.source
    if radius - slack >= source.longest_length( ):
        # Every admissible ball covers the left vertex of the origin tile.
        anchors = ( tiling.origin_index, )
    else:
        anchors = range(
            source.locate( tiling.origin - reach ),
            source.locate( tiling.origin + reach ) + 1 )
    tried = set( )
    for anchor in anchors:
        position = source.vertex( anchor ) - tiling.origin
        start = source_.locate( tiling_.origin + position - epsilon )
        stop = source_.locate( tiling_.origin + position + epsilon ) + 1
        for index in range( start, stop + 1 ):
            offset = position - ( source_.vertex( index ) - tiling_.origin )
            if abs( offset ) >= epsilon or offset in tried: continue
            tried.add( offset )
            low, high = _agreement_run(
                tiling, tiling_, anchor, index, position, reach )
            if _admits_center( low, high, radius, slack, offset ): return True
    return False


def _admits_center( low, high, radius, slack, offset ):
    ''' Is some center ``c`` in ``[low + r, high - r]`` within both slacks?
    '''
    closed_low, closed_high = low + radius, high - radius
    open_low = max( -slack, offset - slack )
    open_high = min( slack, offset + slack )
    return (
            closed_low <= closed_high
        and open_low < open_high
        and closed_low < open_high
        and closed_high > open_low )


def _agreement_run( tiling, tiling_, index, index_, position, reach ):
    ''' Extent of identical tiles around a shared vertex, within reach.

        Returns the ends of the run in tiling coordinates; ends beyond reach
        are reported at reach. '''
    source, source_ = tiling.source, tiling_.source
    ends = [ ]
    for step in ( -1, 1 ):
        end, count, chunk = position, 0, 64
        while True:
            if 0 < step:
                labels = source.labels( index + count, index + count + chunk )
                labels_ = source_.labels(
                    index_ + count, index_ + count + chunk )
            else:
                labels = source.labels(
                    index - count - chunk, index - count )[ : : -1 ]
                labels_ = source_.labels(
                    index_ - count - chunk, index_ - count )[ : : -1 ]
            for label, label_ in zip( labels, labels_ ):
                length = source.length_of( label )
                if label != label_ or length != source_.length_of( label_ ):
                    break
                end = end + step * length
                if abs( end ) >= reach: break
            else:
                count += chunk
                chunk *= 2
                continue
            break
        if abs( end ) >= reach: end = step * reach
        ends.append( end )
    return tuple( ends )


def _are_close( tiling, tiling_, epsilon, displacement ):
    ''' Are the tilings close at scale epsilon? '''
    if None is not displacement and abs( displacement ) < epsilon:
        return True
    epsilon = __.QuadraticNumber( epsilon )
    radius, slack = 1 / epsilon, epsilon / 2
    interior = _interior_labels( tiling, radius, slack )
    if interior & _interior_labels( tiling_, radius, slack ): return True
    return _align_vertices( tiling, tiling_, radius, slack, epsilon )


@__.lru_cache( maxsize = 32 )
def _expand_side( source, leftward, size ):
    ''' Labels and cumulative lengths of one side of the fixed point. '''
    rule = source.rule
    if leftward:
        rule = __.SubstitutionRule( {
            letter: tuple( reversed( image ) )
            for letter, image in zip( rule.alphabet, rule.images ) } )
        seed = source.left_seed
    else: seed = source.right_seed
    labels = __.fixed_point_prefix( rule, seed, size ).symbols
    return labels, _accumulate( map( source.length_of, labels ) )


def _choose_seeds( rule ):
    ''' First legal pair of letters whose sides both grow into fixed points.
    '''
    reverse = __.SubstitutionRule( {
        letter: tuple( reversed( image ) )
        for letter, image in zip( rule.alphabet, rule.images ) } )
    order = { letter: index for index, letter in enumerate( rule.alphabet ) }
    pairs = sorted(
        ( tuple( factor ) for factor in __.two_factors( rule, 2 ) ),
        key = lambda pair: ( order[ pair[ 0 ] ], order[ pair[ 1 ] ] ) )
    for left, right in pairs:
        try:
            __.fixed_point_prefix( reverse, left, 1 )
            __.fixed_point_prefix( rule, right, 1 )
        except __.IncorrectData: continue
        return left, right
    raise __.our_exception_factory_provider( 'absent_fixed_prefix' )(
        rule.alphabet[ 0 ], SubstitutionSource )


def _displacement_between( tiling, tiling_ ):
    ''' Displacement from one tiling to the other, if they share a source. '''
    source, shift = tiling.source.canonical_form( )
    source_, shift_ = tiling_.source.canonical_form( )
    if source != source_: return None
    return ( tiling_.origin - shift_ ) - ( tiling.origin - shift )


def _frame_coordinates( value, alpha, invocation ):
    ''' Rational coordinates of value in the frame ``(1, alpha)``. '''
    if None is alpha:
        if not value.is_rational( ):
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'value', invocation, 'rational value' )
        return ( value.rat_part, )
    if not value.is_rational( ) and value.radicand != alpha.radicand:
        raise __.our_exception_factory_provider( 'radicand_mismatch' )(
            alpha.radicand, value.radicand, 'frame coordinates' )
    second = value.surd_part / alpha.surd_part
    return ( value.rat_part - second * alpha.rat_part, second )


def _frame_value( coordinates, alpha ):
    if None is alpha: return __.QuadraticNumber( coordinates[ 0 ] )
    first, second = coordinates
    return first + second * alpha


def _grow_side( source, leftward, count ):
    size = 64
    while size < count: size *= 2
    return _expand_side( source, leftward, size )


def _interior_labels( tiling, radius, slack ):
    ''' Labels of tiles which can hold a whole ball of radius about a center
        within slack of the origin. '''
    source = tiling.source
    if 2 * radius > source.longest_length( ): return set( )
    reach = radius + slack
    labels = set( )
    for tile in window( tiling, -reach, reach ):
        low, high = tile.left + radius, tile.right - radius
        if low <= high and low < slack and high > -slack:
            labels.add( tile.label )
    return labels


def _settle_index( source, position, index ):
    ''' Adjusts estimated index until it locates position exactly. '''
    while source.vertex( index ) > position: index -= 1
    while source.vertex( index + 1 ) <= position: index += 1
    return index
