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


''' Ensure correctness of exact quadratic arithmetic. '''


from fractions import Fraction

from hypothesis import given, settings as ht_settings_maker
from hypothesis.strategies import fractions, integers, sampled_from
from pytest import mark, raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull.exactnum import (
        QuadraticNumber,
        calculate_sign,
        parse_quadratic,
        qn_arith,
        qn_conjugate,
        qn_floor_ceil,
        qn_sign,
        qn_to_float,
        render_quadratic,
        surd,
    )


ht_settings = ht_settings_maker( print_blob = True )

_rationals = fractions( min_value = -50, max_value = 50, max_denominator = 30 )
_radicands = sampled_from( ( 2, 3, 5, 6, 7, 10, 13 ) )


def _golden( ): return __.QuadraticNumber( 1, 1, 5 ) / 2


#--------------------------------- Values -----------------------------------#


@mark.parametrize(
    'parts, expectation',
    (
        ( ( 0, 1, 12 ), ( 0, 2, 3 ) ),
        ( ( 1, 1, 4 ), ( 3, 0, 1 ) ),
        ( ( 5, 7, 0 ), ( 5, 0, 1 ) ),
        ( ( 1, 0, 5 ), ( 1, 0, 1 ) ),
        ( ( 0, Fraction( 1, 3 ), 18 ), ( 0, 1, 2 ) ),
    )
)
def test_011_radicand_reduction( parts, expectation ):
    ''' Radicands are square-free and rationals carry radicand 1. '''
    value = __.QuadraticNumber( *parts )
    assert expectation == (
        value.rat_part, value.surd_part, value.radicand )


@mark.parametrize(
    'parts', ( ( 1.5, 0, 1 ), ( 0, True, 2 ), ( 0, 1, -3 ), ( 0, 1, 2.0 ) ) )
def test_016_invalid_parts( parts ):
    ''' Parts must be exact and radicands nonnegative integers. '''
    with raises( __.exceptions.IncorrectData ):
        __.QuadraticNumber( *parts )


def test_021_field_identities( ):
    ''' Golden mean satisfies its minimal polynomial. '''
    golden = _golden( )
    assert golden * golden == golden + 1
    assert 1 / golden == golden - 1
    assert golden ** -1 == golden - 1
    assert -1 == golden.norm( )
    assert 1 == golden.trace( )
    assert golden.conjugate( ) == 1 - golden
    assert __.surd( 2 ) ** 2 == 2


def test_022_rational_interplay( ):
    ''' Integers and exact rationals mix with quadratic numbers. '''
    half = __.QuadraticNumber( Fraction( 1, 2 ) )
    assert half == Fraction( 1, 2 )
    assert hash( half ) == hash( Fraction( 1, 2 ) )
    assert __.QuadraticNumber( 2 ) == 2
    assert __.QuadraticNumber( 2 ).is_integral( )
    assert Fraction( 1, 2 ) == half.as_rational( )
    assert 3 - __.surd( 2 ) == __.QuadraticNumber( 3, -1, 2 )
    assert 1 == 1 + __.surd( 2 ) - __.surd( 2 )
    assert ( __.surd( 2 ) - __.surd( 2 ) ).is_rational( )


def test_023_as_rational_rejects_irrational( ):
    ''' Irrational values have no rational form. '''
    with raises( __.exceptions.IncorrectData ): __.surd( 2 ).as_rational( )


def test_026_radicand_mismatch( ):
    ''' Values of distinct quadratic fields do not combine. '''
    with raises( __.exceptions.IncorrectData ) as exception_info:
        __.surd( 2 ) + __.surd( 5 )
    assert 'radicand_mismatch' == (
        exception_info.value.exception_labels[ 'failure class' ] )
    with raises( __.exceptions.IncorrectData ):
        __.surd( 2 ) * __.surd( 3 )


def test_027_vanishing_denominator( ):
    ''' Division by exact zero is indeterminate. '''
    with raises( __.exceptions.IndeterminateQuotient ):
        __.surd( 2 ) / 0
    with raises( ZeroDivisionError ):
        __.surd( 2 ) / ( __.surd( 2 ) - __.surd( 2 ) )


#--------------------------------- Order ------------------------------------#


@mark.parametrize(
    'parts, expectation',
    (
        ( ( 3, -2, 2 ), 1 ),
        ( ( 1, -1, 2 ), -1 ),
        ( ( -3, 2, 2 ), -1 ),
        ( ( 0, 0, 5 ), 0 ),
        ( ( -1, 1, 2 ), 1 ),
        ( ( 2, -1, 4 ), 0 ),
    )
)
def test_031_calculate_sign( parts, expectation ):
    ''' Signs are exact, also under near cancellation. '''
    assert expectation == __.calculate_sign( *parts )


def test_032_comparisons( ):
    ''' Order is decided exactly. '''
    assert __.surd( 2 ) < Fraction( 3, 2 )
    assert __.surd( 2 ) > Fraction( 141, 100 )
    assert __.surd( 2 ) <= __.surd( 2 )
    assert _golden( ) >= 1
    assert -1 == __.qn_sign( 1 - __.surd( 2 ) )
    assert __.QuadraticNumber( 1, -1, 2 ) == -__.QuadraticNumber( -1, 1, 2 )


@mark.parametrize(
    'text, expectation',
    (
        ( '(1 + sqrt(5))/2', ( 1, 2 ) ),
        ( '-sqrt(2)', ( -2, -1 ) ),
        ( 'sqrt(2) - 1', ( 0, 1 ) ),
        ( '7/3', ( 2, 3 ) ),
        ( '-4', ( -4, -4 ) ),
        ( '1000001*sqrt(2)', ( 1414214, 1414215 ) ),
    )
)
def test_041_qn_floor_ceil( text, expectation ):
    ''' Floors and ceilings are exact. '''
    assert expectation == __.qn_floor_ceil( __.parse_quadratic( text ) )


@given( _rationals, _rationals, _radicands )
@ht_settings
def test_042_floor_brackets( rat_part, surd_part, radicand ):
    ''' Floor lies at most the value, and exceeds it less than one. '''
    value = __.QuadraticNumber( rat_part, surd_part, radicand )
    floor = value.floor( )
    assert floor <= value < floor + 1
    assert value.ceil( ) - floor == ( 0 if value.is_integral( ) else 1 )


@given( _rationals, _rationals, _radicands )
@ht_settings
def test_043_conjugate_norm( rat_part, surd_part, radicand ):
    ''' Value times conjugate is the rational norm. '''
    value = __.QuadraticNumber( rat_part, surd_part, radicand )
    product = value * __.qn_conjugate( value )
    assert product.is_rational( )
    assert product == value.norm( )
    assert value + value.conjugate( ) == value.trace( )


#------------------------------- Operations ---------------------------------#


@mark.parametrize(
    'operation, expectation',
    (
        ( 'add', __.QuadraticNumber( 1, 2, 2 ) ),
        ( 'sub', __.QuadraticNumber( 1, 0, 1 ) ),
        ( 'mul', __.QuadraticNumber( 2, 1, 2 ) ),
        ( 'div', __.QuadraticNumber( 1, Fraction( 1, 2 ), 2 ) ),
    )
)
def test_051_qn_arith( operation, expectation ):
    ''' Named field operations agree with operators. '''
    x, y = __.QuadraticNumber( 1, 1, 2 ), __.surd( 2 )
    assert expectation == __.qn_arith( x, y, operation )


@mark.parametrize(
    'x, y, operation',
    ( ( 1, 2, 'pow' ), ( 1.5, 2, 'add' ), ( 1, '2', 'mul' ) ) )
def test_056_qn_arith_rejects( x, y, operation ):
    ''' Unknown operations and inexact operands are rejected. '''
    with raises( __.exceptions.IncorrectData ):
        __.qn_arith( x, y, operation )


def test_061_qn_to_float( ):
    ''' Approximations are close at the requested precision. '''
    approximation = __.qn_to_float( _golden( ), 64 )
    assert abs( float( approximation ) - 1.618033988749895 ) < 1e-15
    wide = __.qn_to_float( _golden( ), 200 )
    assert abs( wide - approximation ) < 1e-18
    assert 0.5 == float( __.qn_to_float( Fraction( 1, 2 ) ) )
    assert abs( float( __.surd( 2 ) ) - 1.4142135623730951 ) < 1e-15


@mark.parametrize( 'precision', ( 16, 1.5 ) )
def test_066_qn_to_float_rejects( precision ):
    ''' Precision must be an integer count of at least 32 bits. '''
    with raises( __.exceptions.IncorrectData ):
        __.qn_to_float( _golden( ), precision )


#------------------------------ Literals ------------------------------------#


@mark.parametrize(
    'text, expectation',
    (
        ( '(1 + sqrt(5))/2', '1/2 + 1/2*sqrt(5)' ),
        ( 'sqrt(12)', '2*sqrt(3)' ),
        ( '-sqrt(2)', '-sqrt(2)' ),
        ( '3/4', '3/4' ),
        ( '-(1 + 3*sqrt(5))/2', '-1/2 - 3/2*sqrt(5)' ),
        ( '2 - 2*sqrt(4)', '-2' ),
        ( '1/(sqrt(2) + 1)', '-1 + sqrt(2)' ),
        ( '  + 7 ', '7' ),
    )
)
def test_071_parse_and_render( text, expectation ):
    ''' Literals parse exactly and render canonically. '''
    value = __.parse_quadratic( text )
    assert expectation == __.render_quadratic( value )
    assert value == __.parse_quadratic( str( value ) )


@mark.parametrize(
    'text, position',
    (
        ( '1.5', 0 ),
        ( '1 + 0.5', 4 ),
        ( '2e3', 0 ),
        ( '1 +', 3 ),
        ( '2 $ 3', 2 ),
        ( 'sqrt(x)', 5 ),
        ( '(1', 2 ),
        ( '1/0', 1 ),
        ( '1 2', 2 ),
        ( 'sqrt 2', 5 ),
        ( '', 0 ),
    )
)
def test_076_parse_failures( text, position ):
    ''' Unparseable literals report the offending position. '''
    with raises( __.exceptions.UnparseableText ) as exception_info:
        __.parse_quadratic( text )
    exception = exception_info.value
    assert position == exception.exception_labels[ 'position' ]
    assert str( exception ).endswith( f"  {text}\n  {' ' * position}^" )


def test_077_parse_rejects_nonstring( ):
    ''' Only text is parsed. '''
    with raises( __.exceptions.IncorrectData ):
        __.parse_quadratic( 1.5 )
