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


''' Ensure correctness of drawings and graph descriptions. '''


from pytest import raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull import rendering as module
    from sturmhull.apcomplex import build_collared, build_uncollared
    from sturmhull.cps import CutProjectScheme
    from sturmhull.exactnum import parse_quadratic
    from sturmhull.hull import (
        SturmianSource,
        SubstitutionSource,
        Tiling,
        window,
    )
    from sturmhull.substitution import FIBONACCI
    from sturmhull.words import SturmianParams, sturmian_block


def _params( ):
    return __.SturmianParams(
        __.parse_quadratic( '(3 - sqrt(5))/2' ), 0 )


def test_011_palette( ):
    ''' Fills follow the alphabet and wrap around. '''
    palette = __.module.Palette( )
    assert palette.fills[ 1 ] == palette.fill_for( ( 'a', 'b' ), 'b' )
    palette = __.module.Palette( fills = ( '#000000', ) )
    assert '#000000' == palette.fill_for( ( 0, 1 ), 1 )


def test_021_tiling_strip( ):
    ''' Strips carry one rectangle per tile over a background. '''
    tiling = __.Tiling( __.SubstitutionSource( __.FIBONACCI ) )
    drawing = __.module.render_tiling_strip( tiling, -3, 3 )
    text = drawing.as_svg( )
    assert '<svg' in text
    patch = __.window( tiling, -3, 3 )
    assert len( patch ) + 1 == text.count( '<rect' )


def test_022_tiling_strip_rejects( ):
    ''' Strips need a tiling and a positive unit. '''
    tiling = __.Tiling( __.SturmianSource( _params( ) ) )
    with raises( __.exceptions.IncorrectData ):
        __.module.render_tiling_strip( __.FIBONACCI, 0, 1 )
    with raises( __.exceptions.IncorrectData ):
        __.module.render_tiling_strip( tiling, 0, 1, unit = 0 )
    with raises( __.exceptions.IncorrectData ):
        __.module.render_tiling_strip( tiling, 1, 0 )


def test_031_cutting_sequence( ):
    ''' Symbols of the steps are written under the grid. '''
    params = _params( )
    text = __.module.render_cutting_sequence( params, -3, 4 ).as_svg( )
    assert '<svg' in text
    symbols = __.sturmian_block( params, -3, 4 )
    assert len( symbols ) <= text.count( '<text' )


def test_032_cutting_sequence_rejects( ):
    ''' Empty ranges and foreign parameters are rejected. '''
    with raises( __.exceptions.IncorrectData ):
        __.module.render_cutting_sequence( _params( ), 4, 4 )
    with raises( __.exceptions.IncorrectData ):
        __.module.render_cutting_sequence( 'params', 0, 4 )


def test_041_cut_and_project( ):
    ''' Lattice pictures carry the projected tiles. '''
    scheme = __.CutProjectScheme( __.parse_quadratic( 'sqrt(2) - 1' ), 0 )
    text = __.module.render_cut_and_project( scheme, 0, 3 ).as_svg( )
    assert '<svg' in text
    assert '<circle' in text
    with raises( __.exceptions.IncorrectData ):
        __.module.render_cut_and_project( scheme, 0, 0 )


def test_051_graph_dot( ):
    ''' Graphs render as directed DOT graphs with labelled edges. '''
    text = __.module.render_graph_dot( __.build_uncollared( __.FIBONACCI ) )
    assert text.startswith( 'digraph anderson_putnam {' )
    assert text.endswith( '}\n' )
    assert '  v0 -> v0 [label="a"];' in text.splitlines( )
    assert '  v0 -> v0 [label="b"];' in text.splitlines( )
    text = __.module.render_graph_dot( __.build_collared( __.FIBONACCI ) )
    assert '  v0 -> v1 [label="b[a]b"];' in text.splitlines( )
    assert 3 == sum(
        1 for line in text.splitlines( ) if line.startswith( '  v' )
        and '->' not in line )
    with raises( __.exceptions.IncorrectData ):
        __.module.render_graph_dot( __.FIBONACCI )


def test_061_save_drawing( tmp_path ):
    ''' Drawings are written as SVG files. '''
    tiling = __.Tiling( __.SturmianSource( _params( ) ) )
    path = tmp_path / 'strip.svg'
    __.module.save_drawing(
        __.module.render_tiling_strip( tiling, 0, 5 ), path )
    assert '<svg' in path.read_text( )
