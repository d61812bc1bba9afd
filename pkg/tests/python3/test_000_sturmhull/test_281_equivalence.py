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


''' Ensure correctness of equivalence decisions and certificates. '''


from fractions import Fraction

from pytest import mark, raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull.confrac import (
        IntegerMatrix,
        cf_expand,
        is_purely_periodic,
        mobius_apply,
    )
    from sturmhull.equivalence import (
        EquivalenceVerdict,
        SubstitutiveCertificate,
        TorusMapClass,
        class_substitutive_witness,
        diffeo_criterion,
        soe_tiling_spaces,
    )
    from sturmhull.exactnum import parse_quadratic
    from sturmhull.substitution import elementary_morphism


_golden = '(sqrt(5) - 1)/2'
_silver = 'sqrt(2) - 1'


def test_011_distinct_tails( ):
    ''' Golden and silver tiling spaces are not equivalent. '''
    golden = __.parse_quadratic( _golden )
    silver = __.parse_quadratic( _silver )
    verdict = __.soe_tiling_spaces( golden, silver )
    assert isinstance( verdict, __.EquivalenceVerdict )
    assert not verdict.equivalent
    assert None is verdict.witness
    assert __.cf_expand( golden ) == verdict.alpha_expansion
    assert __.cf_expand( silver ) == verdict.beta_expansion
    assert 'cf_tails' == verdict.route


def test_012_reflected_golden( ):
    ''' Golden slope and its reflection are related by a flip. '''
    golden = __.parse_quadratic( _golden )
    verdict = __.soe_tiling_spaces( golden, 1 - golden )
    assert verdict.equivalent
    assert '[[2, 1], [1, 0]]' == str( verdict.witness )


@mark.parametrize(
    'alpha, beta, equivalent',
    (
        ( _golden, '(3 - sqrt(5))/2', True ),
        ( _silver, '2 - sqrt(2)', True ),
        ( 'sqrt(3) - 1', '2 - sqrt(3)', True ),
        ( _silver, 'sqrt(3) - 1', False ),
        ( _golden, 'sqrt(3) - 1', False ),
    )
)
def test_016_decisions( alpha, beta, equivalent ):
    ''' Witnesses map the first slope exactly onto the second. '''
    alpha = __.parse_quadratic( alpha )
    beta = __.parse_quadratic( beta )
    verdict = __.soe_tiling_spaces( alpha, beta )
    assert equivalent == verdict.equivalent
    if not equivalent: return
    assert beta == __.mobius_apply( verdict.witness, alpha )
    assert 1 == abs( verdict.witness.determinant( ) )


@mark.parametrize(
    'alpha, beta',
    (
        ( Fraction( 1, 3 ), _golden ),
        ( _golden, '(1 + sqrt(5))/2' ),
        ( '1 - sqrt(2)', _golden ),
    )
)
def test_017_decision_rejects( alpha, beta ):
    ''' Slopes are quadratic irrationals in the unit interval. '''
    if isinstance( alpha, str ): alpha = __.parse_quadratic( alpha )
    beta = __.parse_quadratic( beta )
    with raises( __.exceptions.IncorrectData ):
        __.soe_tiling_spaces( alpha, beta )


@mark.parametrize(
    'entries, kind',
    (
        ( ( 1, 1, 0, 1 ), 'Diffeomorphism' ),
        ( ( 0, 1, 1, 0 ), 'Diffeomorphism' ),
        ( ( 2, 0, 0, 1 ), 'SmoothOnly' ),
        ( ( 3, 1, 1, 1 ), 'SmoothOnly' ),
        ( ( 1, 2, 2, 4 ), 'Neither' ),
    )
)
def test_021_diffeo_criterion( entries, kind ):
    ''' Determinant classifies the induced map of irrational tori. '''
    assert getattr( __.TorusMapClass, kind ) == __.diffeo_criterion(
        __.IntegerMatrix( *entries ) )


def test_022_diffeo_criterion_rejects( ):
    ''' Only integer matrices are classified. '''
    with raises( __.exceptions.IncorrectData ):
        __.diffeo_criterion( ( ( 1, 0 ), ( 0, 1 ) ) )


def test_031_golden_certificate( ):
    ''' Golden slope is its own representative, fixed by Fibonacci. '''
    golden = __.parse_quadratic( _golden )
    certificate = __.class_substitutive_witness( golden )
    assert isinstance( certificate, __.SubstitutiveCertificate )
    assert golden == certificate.beta
    assert '[[1, 0], [0, 1]]' == str( certificate.witness )
    assert __.elementary_morphism( 1 ) == certificate.rule
    assert __.parse_quadratic( '(1 + sqrt(5))/2' ) == certificate.eigenvalue
    assert certificate.pisot
    assert ( 1, ) == certificate.beta_expansion.period


@mark.parametrize(
    'alpha, beta, eigenvalue',
    (
        ( '(1 + sqrt(5))/2', _golden, '(1 + sqrt(5))/2' ),
        ( '(3 - sqrt(5))/2', _golden, '(1 + sqrt(5))/2' ),
        ( _silver, _silver, '1 + sqrt(2)' ),
        ( '3 + sqrt(2)', _silver, '1 + sqrt(2)' ),
    )
)
def test_032_certificates( alpha, beta, eigenvalue ):
    ''' Certificates hold exactly for slopes of any integer part. '''
    alpha = __.parse_quadratic( alpha )
    certificate = __.class_substitutive_witness( alpha )
    assert alpha == certificate.alpha
    assert __.parse_quadratic( beta ) == certificate.beta
    assert certificate.beta == __.mobius_apply( certificate.witness, alpha )
    assert __.is_purely_periodic( certificate.beta_expansion )
    assert __.parse_quadratic( eigenvalue ) == certificate.eigenvalue
    assert certificate.pisot


def test_036_certificate_of_longer_period( ):
    ''' Composite morphisms certify slopes with longer periods. '''
    alpha = __.parse_quadratic( 'sqrt(3) - 1' )
    certificate = __.class_substitutive_witness( alpha )
    assert alpha == certificate.beta
    assert ( 1, 2 ) == certificate.beta_expansion.period
    assert certificate.pisot


@mark.parametrize( 'alpha', ( Fraction( 1, 2 ), 3, 'golden' ) )
def test_037_certificate_rejects( alpha ):
    ''' Rational slopes have no substitutive representative. '''
    with raises( __.exceptions.IncorrectData ):
        __.class_substitutive_witness( alpha )
