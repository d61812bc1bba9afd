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


''' Ensure correctness of tilings, the metric, and the hull. '''


from fractions import Fraction

from pytest import mark, raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull.exactnum import QuadraticNumber, parse_quadratic
    from sturmhull.hull import (
        DistanceBounds,
        OriginTag,
        Patch,
        PeriodicSource,
        ReturnModule,
        SturmianSource,
        SubstitutionSource,
        Tile,
        Tiling,
        delta_alpha,
        metric_d,
        phi,
        psi,
        return_module,
        return_vectors,
        torus_project,
        translate,
        translation_cocycle,
        vertex_patch,
        window,
    )
    from sturmhull.substitution import FIBONACCI, parse_rule
    from sturmhull.words import (
        Branch,
        SturmianParams,
        shift_params,
        sturmian_block,
    )


_alpha = __.parse_quadratic( '(3 - sqrt(5))/2' )
_golden = __.parse_quadratic( '(1 + sqrt(5))/2' )


def _params( rho = 0, branch = __.Branch.Upper ):
    return __.SturmianParams( _alpha, rho, branch )


def _tiling( rho = 0, branch = __.Branch.Upper ):
    return __.psi( _params( rho, branch ) )


#--------------------------------- Sources ----------------------------------#


def test_011_sturmian_source( ):
    ''' Vertices advance by 1 and alpha along the word. '''
    source = __.SturmianSource( _params( ) )
    assert ( 0, 1 ) == source.alphabet
    assert (
        -2 - _alpha, -1 - _alpha, -1, 0, 1, 1 + _alpha, 2 + _alpha
    ) == tuple( source.vertex( index ) for index in range( -3, 4 ) )
    assert ( 0, 1, 0, 0, 1, 0 ) == source.labels( -3, 3 )
    assert 1 == source.locate( __.QuadraticNumber( 1 ) )
    assert 1 == source.locate( 1 + _alpha / 2 )
    assert -2 == source.locate( -1 - _alpha )
    assert _alpha == source.frame( )
    assert 1 == source.longest_length( )


def test_012_sturmian_source_lattice( ):
    ''' Lattice sources keep the projected positions. '''
    params = _params( 1 - _alpha )
    source = __.SturmianSource( params, lattice = True )
    canonical, shift = source.canonical_form( )
    assert __.SturmianSource( params ) == canonical
    for index in range( -4, 5 ):
        assert source.vertex( index ) == canonical.vertex( index ) + shift
    with raises( __.exceptions.IncorrectData ):
        __.SturmianSource( params, lattice = 1 )


def test_016_periodic_source( ):
    ''' Periodic sources repeat their pattern in both directions. '''
    source = __.PeriodicSource( ( 'a', 'b' ), ( 1, 2 ) )
    assert ( 'a', 'b' ) == source.alphabet
    assert 3 == source.period
    assert ( -3, -2, 0, 1, 3 ) == tuple(
        source.vertex( index ) for index in range( -2, 3 ) )
    assert ( 'b', 'a', 'b', 'a' ) == source.labels( -1, 3 )
    assert -1 == source.locate( __.QuadraticNumber( Fraction( -1, 2 ) ) )
    assert 2 == source.locate( __.QuadraticNumber( 3 ) )
    assert None is source.frame( )
    irrational = __.PeriodicSource( ( 0, 1 ), ( 1, _golden ) )
    assert __.parse_quadratic( 'sqrt(5)' ) == irrational.frame( )


@mark.parametrize(
    'pattern, lengths',
    (
        ( ( 'a', 'a' ), ( 1, 2 ) ),
        ( ( 'a', ), ( 0, ) ),
        ( ( 'a', ), ( 1, 2 ) ),
        ( ( ), ( ) ),
        ( ( 'a', ), ( 1.5, ) ),
    )
)
def test_017_invalid_periodic_sources( pattern, lengths ):
    ''' Each label has one positive exact length. '''
    with raises( __.exceptions.IncorrectData ):
        __.PeriodicSource( pattern, lengths )


def test_021_substitution_source( ):
    ''' Fibonacci fixed point grows on both sides of a legal seed pair. '''
    source = __.SubstitutionSource( __.FIBONACCI )
    assert ( 'b', 'a' ) == ( source.left_seed, source.right_seed )
    assert tuple( 'bababb' ) == source.labels( -3, 3 )
    assert ( 1, _golden ) == source.lengths
    assert -_golden == source.vertex( -1 )
    assert 1 + 2 * _golden == source.vertex( 3 )
    assert 2 == source.locate( 1 + _golden )
    assert -1 == source.locate( __.QuadraticNumber( -1 ) )
    assert _golden == source.frame( )
    tiling = __.Tiling( source )
    assert 'abbab' == str( __.phi( tiling ).block( 0, 5 ) )


@mark.parametrize( 'text', ( 'a>ab; b>ac; c>a', 'a>ab; b>b' ) )
def test_026_substitution_source_rejects( text ):
    ''' Rules need exact Perron data. '''
    with raises( __.exceptions.IncorrectData ):
        __.SubstitutionSource( __.parse_rule( text ) )


#--------------------------------- Tilings ----------------------------------#


def test_031_tiling( ):
    ''' Origins are located within their tiles. '''
    tiling = __.Tiling( __.SturmianSource( _params( ) ), 1 + _alpha / 2 )
    assert ( 0, 1 ) == tiling.labels
    assert 1 == tiling.origin_index
    assert _alpha / 2 == tiling.origin_offset
    with raises( __.exceptions.IncorrectData ):
        __.Tiling( _params( ) )
    with raises( __.exceptions.IncorrectData ):
        __.Tiling( __.SturmianSource( _params( ) ), 0.5 )


def test_032_patch( ):
    ''' Patches are consecutive tiles. '''
    patch = __.Patch( (
        __.Tile( 0, __.QuadraticNumber( 0 ), __.QuadraticNumber( 1 ) ),
        __.Tile( 1, __.QuadraticNumber( 1 ), _alpha ) ) )
    assert ( 0, 1 ) == patch.labels
    assert 1 + _alpha == patch.tiles[ -1 ].right
    moved = patch.shifted( 1 )
    assert 1 == moved.tiles[ 0 ].left
    assert patch.labels == moved.labels
    with raises( __.exceptions.IncorrectData ):
        __.Patch( (
            __.Tile( 0, __.QuadraticNumber( 0 ), __.QuadraticNumber( 1 ) ),
            __.Tile( 1, __.QuadraticNumber( 2 ), _alpha ) ) )


def test_041_window( ):
    ''' Windows hold every tile meeting the closed interval. '''
    patch = __.window( _tiling( ), 0, 2 )
    assert ( 0, 0, 1, 0 ) == patch.labels
    assert -1 == patch.tiles[ 0 ].left
    assert 2 + _alpha == patch.tiles[ -1 ].right
    inner = __.window( _tiling( ), Fraction( 1, 2 ), Fraction( 1, 2 ) )
    assert ( 0, ) == inner.labels
    with raises( __.exceptions.IncorrectData ):
        __.window( _tiling( ), 2, 0 )


def test_042_vertex_patch( ):
    ''' Vertex patches start at vertices relative to the origin tile. '''
    patch = __.vertex_patch( _tiling( ), 0, 3 )
    assert ( 0, 1, 0 ) == patch.labels
    assert ( 0, 1, 1 + _alpha ) == tuple( tile.left for tile in patch )
    assert ( 1, 0 ) == __.vertex_patch( _tiling( ), -2, 2 ).labels
    with raises( __.exceptions.IncorrectData ):
        __.vertex_patch( _tiling( ), 0, 0 )


def test_051_translate( ):
    ''' Translation moves the origin forward. '''
    tiling = _tiling( )
    moved = __.translate( tiling, 1 )
    assert 1 == moved.origin
    assert '1001010' == str( __.phi( moved ).block( -3, 4 ) )
    assert ( 0, 1 ) == __.window( moved, 0, 0 ).labels
    assert -1 == __.window( moved, 0, 0 ).tiles[ 0 ].left
    assert tiling == __.translate( moved, -1 )


def test_052_phi( ):
    ''' Label sequences keep the origin offset. '''
    sequence = __.phi( __.translate( _tiling( ), Fraction( 1, 2 ) ) )
    assert 0 == sequence.index
    assert Fraction( 1, 2 ) == sequence.offset
    assert '0100101' == str( __.phi( _tiling( ) ).block( -3, 4 ) )
    assert -3 == __.phi( _tiling( ) ).block( -3, 4 ).base_index
    with raises( __.exceptions.IncorrectData ):
        __.phi( _tiling( ) ).block( 4, -3 )


@mark.parametrize(
    'rho, length',
    ( ( 0, 1 ), ( Fraction( 1, 4 ), _alpha ), ( Fraction( 1, 2 ), 1 ) ) )
def test_061_delta_alpha( rho, length ):
    ''' Shift of the word is translation by the length of tile 0. '''
    params = _params( rho )
    assert length == __.delta_alpha( params )
    moved = __.translate( __.psi( params ), __.delta_alpha( params ) )
    shifted = __.psi( __.shift_params( params ) )
    assert 0 == moved.origin_offset
    assert __.phi( shifted ).block( -8, 8 ).symbols == (
        __.phi( moved ).block( -8, 8 ).symbols )


@mark.parametrize(
    'displacement, count',
    (
        ( 0, 0 ),
        ( 1, 1 ),
        ( Fraction( 1, 2 ), 0 ),
        ( 2, 2 ),
        ( Fraction( 5, 2 ), 3 ),
        ( -1, -1 ),
        ( -_alpha - 1, -2 ),
    )
)
def test_071_translation_cocycle( displacement, count ):
    ''' Cocycles count the vertices crossed by the origin. '''
    tiling = _tiling( )
    assert count == __.translation_cocycle( tiling, displacement )
    moved = __.translate( tiling, displacement )
    assert __.phi( tiling ).block( count, count + 6 ).symbols == (
        __.phi( moved ).block( 0, 6 ).symbols )


#--------------------------------- Metric -----------------------------------#


def test_081_distance_bounds( ):
    ''' Bounds are rational intervals. '''
    bounds = __.DistanceBounds( Fraction( 1, 4 ), Fraction( 1, 2 ) )
    assert Fraction( 1, 4 ) == bounds.width( )
    assert Fraction( 1, 3 ) in bounds
    assert 1 not in bounds


def test_082_metric_self_distance( ):
    ''' Tilings are at distance zero from themselves. '''
    bounds = __.metric_d( _tiling( ), _tiling( ), Fraction( 1, 100 ) )
    assert ( 0, 0 ) == ( bounds.low, bounds.high )


def test_083_metric_translate( ):
    ''' Small translates are at the distance of the translation. '''
    tolerance = Fraction( 1, 100 )
    tiling = _tiling( )
    bounds = __.metric_d(
        tiling, __.translate( tiling, Fraction( 1, 10 ) ), tolerance )
    assert Fraction( 1, 10 ) == bounds.high
    assert Fraction( 1, 10 ) in bounds
    assert bounds.width( ) <= tolerance


def test_084_metric_periodic( ):
    ''' Translation by a period gives the same tiling. '''
    tiling = __.Tiling( __.PeriodicSource( ( 0, ), ( 1, ) ) )
    tolerance = Fraction( 1, 50 )
    bounds = __.metric_d( tiling, __.translate( tiling, 1 ), tolerance )
    assert 0 == bounds.low
    assert bounds.high <= tolerance


@mark.parametrize( 'tolerance', ( 0, -1, 0.1 ) )
def test_086_metric_rejects_tolerance( tolerance ):
    ''' Tolerances are positive exact rationals. '''
    with raises( __.exceptions.IncorrectData ):
        __.metric_d( _tiling( ), _tiling( ), tolerance )


def test_087_metric_rejects_foreign_labels( ):
    ''' Tilings without common labels are not compared. '''
    foreign = __.Tiling( __.PeriodicSource( ( 'x', ), ( 1, ) ) )
    with raises( __.exceptions.IncorrectData ):
        __.metric_d( _tiling( ), foreign, Fraction( 1, 10 ) )


@mark.parametrize(
    'pattern',
    ( ( 0, ), ( 1, ), ( 0, 1, 2 ) )
)
def test_088_metric_rejects_other_alphabets( pattern ):
    ''' Tilings over overlapping but unequal alphabets are not compared. '''
    other = __.Tiling(
        __.PeriodicSource( pattern, ( 1, ) * len( pattern ) ) )
    with raises( __.exceptions.IncorrectData ):
        __.metric_d( _tiling( ), other, Fraction( 1, 10 ) )
    with raises( __.exceptions.IncorrectData ):
        __.metric_d( other, _tiling( ), Fraction( 1, 10 ) )


#--------------------------- Returns and the Torus --------------------------#


def test_091_return_vectors( ):
    ''' Returns of a tile are the positions of its label. '''
    tiling = _tiling( )
    patch = __.vertex_patch( tiling, 0, 1 )
    vectors = __.return_vectors( tiling, patch, 3 )
    assert ( -2 - _alpha, -1, 0, 1 + _alpha, 2 + 2 * _alpha ) == vectors


def test_092_return_vectors_rejects( ):
    ''' Patches must occur where stated, and radii be positive. '''
    tiling = _tiling( )
    absent = __.Patch( ( __.Tile( 1, __.QuadraticNumber( 0 ), _alpha ), ) )
    with raises( __.exceptions.IncorrectData ):
        __.return_vectors( tiling, absent, 3 )
    with raises( __.exceptions.IncorrectData ):
        __.return_vectors( tiling, __.vertex_patch( tiling ), 0 )


def test_093_return_module_sturmian( ):
    ''' Returns of a sturmian tiling span the integers and alpha. '''
    tiling = _tiling( )
    vectors = __.return_vectors( tiling, __.vertex_patch( tiling ), 3 )
    module = __.return_module( vectors, _alpha )
    assert 2 == module.rank( )
    assert ( 1, _alpha ) == module.generators
    assert ( ( 1, 0 ), ( 0, 1 ) ) == module.coordinates
    for value in ( 1, _alpha, 3 - 2 * _alpha ):
        representative, cells = module.reduce( value )
        assert 0 == representative
        assert ( 0, 0 ) == cells
    representative, cells = module.reduce( Fraction( 1, 2 ) + _alpha )
    assert Fraction( 1, 2 ) == representative
    assert ( Fraction( 1, 2 ), 0 ) == cells


def test_094_return_module_rational( ):
    ''' Rational returns span a cyclic module. '''
    module = __.return_module( ( Fraction( 1, 2 ), Fraction( 3, 4 ) ) )
    assert 1 == module.rank( )
    assert Fraction( 1, 4 ) == module.generators[ 0 ]
    assert ( Fraction( 1, 8 ), ( Fraction( 1, 2 ), ) ) == module.reduce(
        Fraction( 5, 8 ) )
    empty = __.return_module( ( 0, ) )
    assert 0 == empty.rank( )
    assert ( 1, ( ) ) == empty.reduce( 1 )


def test_095_return_module_rejects( ):
    ''' Irrational returns need a frame. '''
    with raises( __.exceptions.IncorrectData ):
        __.return_module( ( 1, _alpha ) )
    with raises( __.exceptions.IncorrectData ):
        __.return_module( ( 1, ), Fraction( 1, 2 ) )


@mark.parametrize(
    'rho, branch, tag',
    (
        ( 0, __.Branch.Upper, __.OriginTag.BranchHigh ),
        ( 0, __.Branch.Lower, __.OriginTag.BranchLow ),
    )
)
def test_101_torus_project_origin( rho, branch, tag ):
    ''' Singular tilings project to a tagged origin. '''
    module = __.ReturnModule( ( 1, _alpha ), _alpha, ( ( 1, 0 ), ( 0, 1 ) ) )
    point = __.torus_project( _tiling( rho, branch ), module )
    assert point.is_zero( )
    assert tag is point.origin_tag


@mark.parametrize(
    'rho, cells',
    (
        ( Fraction( 1, 3 ), ( Fraction( 2, 3 ), 0 ) ),
        ( Fraction( 1, 2 ), ( Fraction( 1, 2 ), 0 ) ),
        ( Fraction( 4, 5 ), ( Fraction( 1, 5 ), 0 ) ),
    )
)
def test_102_torus_project_intercepts( rho, cells ):
    ''' Regular tilings project to the class of their negated intercept. '''
    module = __.ReturnModule( ( 1, _alpha ), _alpha, ( ( 1, 0 ), ( 0, 1 ) ) )
    point = __.torus_project( _tiling( rho ), module )
    assert not point.is_zero( )
    assert None is point.origin_tag
    assert cells == point.coordinates


def test_103_torus_project_separates_intercepts( ):
    ''' Intercepts outside one coset project to distinct classes. '''
    module = __.ReturnModule( ( 1, _alpha ), _alpha, ( ( 1, 0 ), ( 0, 1 ) ) )
    intercepts = ( 0, Fraction( 1, 3 ), Fraction( 1, 2 ), _alpha / 2 )
    points = {
        __.torus_project( _tiling( rho ), module ).coordinates
        for rho in intercepts }
    assert len( intercepts ) == len( points )
    params = _params( Fraction( 1, 3 ) )
    point = __.torus_project( __.psi( params ), module )
    shifted = __.torus_project( __.psi( __.shift_params( params ) ), module )
    assert shifted == point.translate( __.delta_alpha( params ) )


def test_104_torus_project_translates( ):
    ''' Translation of tilings is translation on the torus. '''
    module = __.ReturnModule( ( 1, _alpha ), _alpha, ( ( 1, 0 ), ( 0, 1 ) ) )
    tiling = _tiling( )
    point = __.torus_project( tiling, module )
    half = __.torus_project( __.translate( tiling, Fraction( 1, 2 ) ), module )
    assert not half.is_zero( )
    assert None is half.origin_tag
    assert ( Fraction( 1, 2 ), 0 ) == half.coordinates
    assert half == point.translate( Fraction( 1, 2 ) )
    assert point == point.translate( 1 + _alpha )
    assert __.OriginTag.BranchHigh is point.translate( _alpha ).origin_tag
    assert None is half.translate( Fraction( 1, 2 ) ).origin_tag
