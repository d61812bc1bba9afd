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


''' Pictures of tilings, cutting sequences, and graphs.

    Drawings are SVG documents built with :py:mod:`drawsvg`; graphs are
    written in the DOT language. Exact positions are turned into floats
    here and nowhere else. Units are user units, scaled by ``unit`` per
    unit of length; the vertical axis points up, as in the plane.
    '''


from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    import drawsvg as draw

    from .apcomplex import APGraph
    from .configuration import acquire_scribe
    from .cps import CutProjectScheme, vertices_in_range
    from .exactnum import qn_to_float
    from .exceptionality import our_exception_factory_provider
    from .hull import Tiling, window
    from .validators import (
        validate_argument_class,
        validate_argument_positivity,
        validate_argument_quadratic,
    )
    from .words import SturmianParams, sturmian_block


class Palette( _ValueObject ):
    ''' Colors for labels, in alphabet order, and for decorations. '''

    __slots__ = ( 'fills', 'ink', 'paper', 'accent' )

    def __init__(
        self,
        fills = (
            '#4c72b0', '#dd8452', '#55a868', '#c44e52', '#8172b3',
            '#937860' ),
        ink = '#222222', paper = '#ffffff', accent = '#c44e52',
    ):
        self._establish(
            fills = tuple( fills ), ink = ink, paper = paper,
            accent = accent )

    def fill_for( self, alphabet, label ):
        ''' Fill color of the tiles of label. '''
        return self.fills[ alphabet.index( label ) % len( self.fills ) ]


@_our_interceptor
def render_tiling_strip(
    tiling, low, high, unit = 40, palette = Palette( )
):
    ''' Strip of the tiles meeting ``[low, high]``, origin marked.

        Each tile is a rectangle colored by its label, with the label
        written inside; the origin is a tick below the strip. '''
    __.validate_argument_class(
        tiling, __.Tiling, 'tiling', render_tiling_strip )
    __.validate_argument_positivity( unit, 'unit', render_tiling_strip )
    patch = __.window( tiling, low, high )
    scribe = __.acquire_scribe( __name__ )
    left = _to_float( patch.tiles[ 0 ].left )
    right = _to_float( patch.tiles[ -1 ].right )
    margin, band = unit / 2, unit
    width = ( right - left ) * unit + 2 * margin
    height = band + 2 * margin + unit / 2
    drawing = __.draw.Drawing( width, height )
    drawing.append( __.draw.Rectangle(
        0, 0, width, height, fill = palette.paper ) )
    for tile in patch:
        x = margin + ( _to_float( tile.left ) - left ) * unit
        w = _to_float( tile.length ) * unit
        drawing.append( __.draw.Rectangle(
            x, margin, w, band,
            fill = palette.fill_for( tiling.labels, tile.label ),
            stroke = palette.ink, stroke_width = 1 ) )
        drawing.append( __.draw.Text(
            str( tile.label ), unit / 3, x + w / 2, margin + band / 2,
            fill = palette.paper, text_anchor = 'middle',
            dominant_baseline = 'middle' ) )
    origin = margin - left * unit
    drawing.append( __.draw.Line(
        origin, margin + band, origin, margin + band + unit / 2,
        stroke = palette.accent, stroke_width = 2 ) )
    scribe.debug( f"Strip of {len( patch )} tiles drawn." )
    return drawing


@_our_interceptor
def render_cutting_sequence( params, start, stop, unit = 40 ):
    ''' Line of slope and intercept over the grid, crossings marked.

        Steps are the unit intervals ``(n - 1, n]`` for n in
        ``[start, stop)``; the symbol of each step is written beneath it.
        '''
    __.validate_argument_class(
        params, __.SturmianParams, 'params', render_cutting_sequence )
    __.validate_argument_positivity(
        unit, 'unit', render_cutting_sequence )
    symbols = __.sturmian_block( params, start, stop )
    if not symbols:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'stop', render_cutting_sequence, 'index above start' )
    alpha, rho = params.alpha, params.rho
    low_x, high_x = start - 1, stop - 1
    low_y = ( low_x * alpha + rho ).floor( )
    high_y = ( high_x * alpha + rho ).ceil( )
    frame = _Frame( low_x, high_x, low_y, high_y, unit, footer = unit )
    palette = Palette( )
    drawing = frame.drawing( palette )
    for x in range( low_x, high_x + 1 ):
        drawing.append( frame.line(
            x, low_y, x, high_y, stroke = '#bbbbbb', stroke_width = 1 ) )
    for y in range( low_y, high_y + 1 ):
        drawing.append( frame.line(
            low_x, y, high_x, y, stroke = '#bbbbbb', stroke_width = 1 ) )
    slope, intercept = _to_float( alpha ), _to_float( rho )
    drawing.append( frame.line(
        low_x, low_x * slope + intercept, high_x, high_x * slope + intercept,
        stroke = palette.fills[ 0 ], stroke_width = 2 ) )
    for level in range( low_y, high_y + 1 ):
        abscissa = ( level - intercept ) / slope
        if not low_x <= abscissa <= high_x: continue
        drawing.append( __.draw.Circle(
            *frame.point( abscissa, level ), unit / 10,
            fill = palette.accent ) )
    for index, symbol in enumerate( symbols, start ):
        x, y = frame.point( index - 0.5, low_y )
        drawing.append( __.draw.Text(
            str( symbol ), unit / 3, x, y + unit / 2,
            fill = palette.ink, text_anchor = 'middle' ) )
    return drawing


@_our_interceptor
def render_cut_and_project( scheme, low, high, unit = 40 ):
    ''' Lattice, acceptance strip, and projected tiling.

        Lattice points are drawn at ``(i, j)``; accepted points over the
        range are joined into a staircase. The strip is bounded by the
        lines where the internal coordinate is 0 and 1. Below the lattice,
        the projected tiles are drawn at their physical lengths, which are
        the normalized lengths 1 and alpha times ``1/sqrt(1 + alpha**2)``.
        '''
    __.validate_argument_class(
        scheme, __.CutProjectScheme, 'scheme', render_cut_and_project )
    __.validate_argument_positivity( unit, 'unit', render_cut_and_project )
    vertices = __.vertices_in_range( scheme, low, high )
    if 2 > len( vertices ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'high', render_cut_and_project,
            'position leaving room for at least one tile' )
    points = vertices.points
    low_x = min( i for i, _ in points ) - 1
    high_x = max( i for i, _ in points ) + 1
    low_y = min( j for _, j in points ) - 1
    high_y = max( j for _, j in points ) + 1
    frame = _Frame(
        low_x, high_x, low_y, high_y, unit, footer = 2 * unit )
    palette = Palette( )
    drawing = frame.drawing( palette )
    alpha, rho = _to_float( scheme.alpha ), _to_float( scheme.rho )
    for bound in ( 0, 1 ):
        # Internal coordinate alpha - rho + j - (i + j)*alpha equals bound.
        level = bound - alpha + rho
        drawing.append( frame.line(
            low_x, ( level + low_x * alpha ) / ( 1 - alpha ),
            high_x, ( level + high_x * alpha ) / ( 1 - alpha ),
            stroke = palette.fills[ 1 ], stroke_width = 1.5,
            stroke_dasharray = '4,3' ) )
    accepted = set( points )
    for i in range( low_x, high_x + 1 ):
        for j in range( low_y, high_y + 1 ):
            drawing.append( __.draw.Circle(
                *frame.point( i, j ), unit / 14,
                fill = palette.ink if ( i, j ) in accepted else '#bbbbbb' ) )
    for ( i, j ), ( i_, j_ ) in zip( points, points[ 1 : ] ):
        drawing.append( frame.line(
            i, j, i_, j_, stroke = palette.ink, stroke_width = 2 ) )
    scale = 1 / ( 1 + alpha ** 2 ) ** 0.5
    origin = _to_float( vertices.positions[ 0 ] )
    base = frame.height - unit
    for gap, position in zip( vertices.gaps( ), vertices.positions ):
        label = 0 if 1 == gap else 1
        x = frame.margin + ( _to_float( position ) - origin ) * scale * unit
        drawing.append( __.draw.Rectangle(
            x, base, _to_float( gap ) * scale * unit, unit / 2,
            fill = palette.fills[ label ], stroke = palette.ink,
            stroke_width = 1 ) )
    return drawing


@_our_interceptor
def render_graph_dot( graph ):
    ''' Graph in the DOT language: vertices as points, tiles as edges. '''
    __.validate_argument_class( graph, __.APGraph, 'graph', render_graph_dot )
    lines = [
        'digraph anderson_putnam {',
        '  node [shape=circle, width=0.3, fixedsize=true];' ]
    lines.extend( f"  v{vertex} [label=\"{vertex}\"];"
                  for vertex in graph.vertices )
    for edge in graph.edges:
        lines.append(
            f"  v{edge.tail} -> v{edge.head} "
            f"[label=\"{edge.label}\"];" )
    lines.append( '}' )
    return '\n'.join( lines ) + '\n'


def save_drawing( drawing, path ):
    ''' Writes drawing as SVG file. '''
    drawing.save_svg( str( path ) )


#--------------------------------- Helpers ----------------------------------#


class _Frame:
    ''' Maps plane coordinates, y up, onto drawing coordinates, y down. '''

    def __init__( self, low_x, high_x, low_y, high_y, unit, footer = 0 ):
        self.low_x, self.high_y = low_x, high_y
        self.unit = unit
        self.margin = unit / 2
        self.width = ( high_x - low_x ) * unit + 2 * self.margin
        self.height = ( high_y - low_y ) * unit + 2 * self.margin + footer

    def drawing( self, palette ):
        drawing = __.draw.Drawing( self.width, self.height )
        drawing.append( __.draw.Rectangle(
            0, 0, self.width, self.height, fill = palette.paper ) )
        return drawing

    def line( self, x, y, x_, y_, **attributes ):
        return __.draw.Line(
            *self.point( x, y ), *self.point( x_, y_ ), **attributes )

    def point( self, x, y ):
        return (
            self.margin + ( x - self.low_x ) * self.unit,
            self.margin + ( self.high_y - y ) * self.unit )


def _to_float( value ):
    if isinstance( value, int ): return float( value )
    return float( __.qn_to_float( __.validate_argument_quadratic(
        value, 'value', _to_float ) ) )
