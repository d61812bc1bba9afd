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


''' Ensure correctness of seeded verification checks. '''


from fractions import Fraction
from random import Random

from hypothesis import given, settings as ht_settings_maker
from hypothesis.strategies import integers
from pytest import mark, raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull import verification as module
    from sturmhull.cps import CutProjectScheme
    from sturmhull.equivalence import class_substitutive_witness
    from sturmhull.exactnum import parse_quadratic
    from sturmhull.words import Branch, SturmianParams, sturmian_block


ht_settings = ht_settings_maker( print_blob = True, max_examples = 40 )
ht_settings_sparse = ht_settings_maker(
    print_blob = True, max_examples = 8, deadline = None )

_betti_line = (
    '  9  PASS  anderson-putnam betti numbers  '
    'Fibonacci 2, collared 2, periodic 1' )


def test_011_selected_checks( ):
    ''' Selected checks run in order and pass. '''
    report = __.module.verify( seed = 7, selection = ( 3, 9 ) )
    assert report.passed
    assert 7 == report.seed
    assert ( 3, 9 ) == tuple( outcome.number for outcome in report.outcomes )
    assert [ 'length convergence', 'anderson-putnam betti numbers' ] == [
        outcome.title for outcome in report.outcomes ]


def test_012_render_table( ):
    ''' Tables are reproducible unless timings are requested. '''
    report = __.module.verify( seed = 3, selection = ( 9, ) )
    lines = report.render_table( ).split( '\n' )
    assert [ 'seed 3', _betti_line, '1 of 1 checks passed' ] == lines
    again = __.module.verify( seed = 3, selection = ( 9, ) )
    assert report.render_table( ) == again.render_table( )
    assert report.render_table( timings = True ).split( '\n' )[ 1 ] \
        .endswith( ' s)' )


@mark.parametrize( 'number', ( 1, 4 ) )
def test_016_single_checks( number ):
    ''' Cheaper checks pass for a fixed seed. '''
    report = __.module.verify( seed = 1, selection = ( number, ) )
    assert report.passed, report.render_table( )


@mark.parametrize( 'seed', ( 0, 11 ) )
def test_017_substitutive_check( seed ):
    ''' Certificates hold for slopes with long expansion periods. '''
    report = __.module.verify( seed = seed, selection = ( 8, ) )
    assert report.passed, report.render_table( )


@mark.parametrize(
    'rho, branch',
    (
        ( Fraction( 1, 3 ), __.Branch.Upper ),
        ( 0, __.Branch.Upper ),
        ( 0, __.Branch.Lower ),
    )
)
def test_018_accepted_lines( rho, branch ):
    ''' Points accepted by the window spell the sturmian word. '''
    alpha = __.parse_quadratic( '(3 - sqrt(5))/2' )
    params = __.SturmianParams( alpha, rho, branch )
    scheme = __.CutProjectScheme(
        alpha, params.rho, __.module._conventions[ branch.value ] )
    assert __.sturmian_block( params, 0, 200 ).symbols == (
        __.module._read_accepted_lines( scheme, 200 ) )


def test_021_failures_are_reported( monkeypatch ):
    ''' Errors inside checks become failed outcomes. '''
    def broken( generator ): raise __.exceptions.InvalidState( 'broken' )
    monkeypatch.setitem( __.module._checks, 9, ( 'broken', broken ) )
    report = __.module.verify( seed = 0, selection = ( 9, ) )
    assert not report.passed
    outcome = report.outcomes[ 0 ]
    assert 'InvalidState: broken' == outcome.detail
    assert report.render_table( ).endswith( '0 of 1 checks passed' )


@mark.parametrize(
    'seed, selection', ( ( 0, ( 11, ) ), ( 0, ( 0, ) ), ( '7', None ) ) )
def test_026_verify_rejects( seed, selection ):
    ''' Seeds are integers and checks exist. '''
    with raises( __.exceptions.IncorrectData ):
        __.module.verify( seed = seed, selection = selection )


@given( integers( min_value = 0, max_value = 10 ** 6 ) )
@ht_settings
def test_031_draw_slope( seed ):
    ''' Drawn slopes are irrationals of the unit interval. '''
    for simple in ( False, True ):
        slope = __.module.draw_slope( Random( seed ), simple = simple )
        assert not slope.is_rational( )
        assert 0 < slope < 1


@given( integers( min_value = 0, max_value = 10 ** 6 ) )
@ht_settings
def test_032_draw_params( seed ):
    ''' Drawn parameters are valid sturmian parameters. '''
    params = __.module.draw_params( Random( seed ) )
    assert isinstance( params, __.SturmianParams )


@given( integers( min_value = 0, max_value = 10 ** 6 ) )
@ht_settings
def test_033_draw_modular_matrix( seed ):
    ''' Drawn matrices are invertible over the integers. '''
    matrix = __.module.draw_modular_matrix( Random( seed ) )
    assert 1 == abs( matrix.determinant( ) )


@given( integers( min_value = 0, max_value = 10 ** 6 ) )
@ht_settings_sparse
def test_036_certify_drawn_slopes( seed ):
    ''' Slopes drawn with rational surd parts are certified. '''
    slope = __.module.draw_slope( Random( seed ) )
    certificate = __.class_substitutive_witness( slope )
    assert certificate.pisot
    assert certificate.beta_expansion.period
