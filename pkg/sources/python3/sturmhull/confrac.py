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


''' Continued fractions of quadratic irrationals and the modular group.

    Expansions are exact and periodic tails are detected structurally:

    .. code-block:: python

        >>> from sturmhull.confrac import cf_expand, cf_equivalent
        >>> from sturmhull.exactnum import parse_quadratic
        >>> print( cf_expand( parse_quadratic( 'sqrt(2)' ) ) )
        [1; (2)]
        >>> print( cf_expand( parse_quadratic( '7/3' ) ) )
        [2; 3]
        >>> root = parse_quadratic( 'sqrt(2)' )
        >>> verdict, witness = cf_equivalent( root, root + 1 )
        >>> verdict, str( witness )
        (True, '[[1, 0], [1, 1]]')

    Matrices act by ``y = (c + x*d)/(a + x*b)``. '''


from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from fractions import Fraction
    from itertools import chain, cycle, islice
    from math import isqrt

    from .configuration import acquire_scribe
    from .exactnum import QuadraticNumber
    from .exceptionality import our_exception_factory_provider
    from .validators import (
        validate_argument_class,
        validate_argument_irrationality,
        validate_argument_nonnegativity,
        validate_argument_quadratic,
    )


class ContinuedFraction( _ValueObject ):
    ''' Partial quotients of a rational or quadratic irrational.

        The ``preperiod`` always holds the integer part as its first entry.
        The ``period`` is in expansion order and is empty for rationals. The
        ``canonical_period`` is its lexicographically minimal rotation, which
        is what tails are compared by. '''

    __slots__ = ( 'preperiod', 'period', 'canonical_period' )

    def __init__( self, preperiod, period = ( ) ):
        preperiod = tuple( preperiod )
        period = tuple( period )
        _validate_quotients( preperiod, period )
        self._establish(
            preperiod = preperiod, period = period,
            canonical_period = _rotate_minimally( period ) )

    def is_rational( self ):
        ''' Does the expansion terminate? '''
        return not self.period

    def __str__( self ):
        head, *tail = self.preperiod
        entries = [ str( term ) for term in tail ]
        if self.period:
            entries.append(
                '({})'.format( ', '.join( map( str, self.period ) ) ) )
        if not entries: return f"[{head}]"
        return "[{}; {}]".format( head, ', '.join( entries ) )


class IntegerMatrix( _ValueObject ):
    ''' Integer matrix ``[[a, b], [c, d]]`` acting by Moebius maps.

        Any determinant is admitted. '''

    __slots__ = ( 'a', 'b', 'c', 'd' )

    def __init__( self, a, b, c, d ):
        for name, entry in zip( 'abcd', ( a, b, c, d ) ):
            __.validate_argument_class( entry, int, name, type( self ) )
        self._establish( a = a, b = b, c = c, d = d )

    @classmethod
    def identity( kind ):
        ''' Identity matrix. '''
        return kind( 1, 0, 0, 1 )

    def determinant( self ):
        ''' Determinant ``ad - bc``. '''
        return self.a * self.d - self.b * self.c

    def rows( self ):
        ''' Entries as nested row tuples. '''
        return ( ( self.a, self.b ), ( self.c, self.d ) )

    def __matmul__( self, other ):
        if not isinstance( other, IntegerMatrix ): return NotImplemented
        product = (
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d )
        if isinstance( self, ModularMatrix ) and isinstance(
            other, ModularMatrix
        ): return ModularMatrix( *product )
        return IntegerMatrix( *product )

    def __str__( self ):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


class ModularMatrix( IntegerMatrix ):
    ''' Element of GL(2,Z): integer matrix with determinant +1 or -1. '''

    __slots__ = ( )

    def __init__( self, a, b, c, d ):
        super( ).__init__( a, b, c, d )
        if self.determinant( ) not in ( 1, -1 ):
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'd', ModularMatrix, 'entry giving determinant +1 or -1' )

    def inverse( self ):
        ''' Exact inverse, again in GL(2,Z). '''
        determinant = self.determinant( )
        return ModularMatrix(
            determinant * self.d, -determinant * self.b,
            -determinant * self.c, determinant * self.a )


def modular_generators( ):
    ''' Elementary generators of GL(2,Z) and their inverses.

        Shears in both directions, the swap, and a reflection. '''
    return (
        ModularMatrix( 1, 1, 0, 1 ), ModularMatrix( 1, -1, 0, 1 ),
        ModularMatrix( 1, 0, 1, 1 ), ModularMatrix( 1, 0, -1, 1 ),
        ModularMatrix( 0, 1, 1, 0 ), ModularMatrix( -1, 0, 0, 1 ),
    )


#------------------------------- Expansions ---------------------------------#


@_our_interceptor
def cf_expand( x ):
    ''' Expands exact value into its continued fraction.

        Rationals follow Euclid's algorithm. Quadratic irrationals follow the
        surd algorithm on states ``(P, Q)`` with ``x = (P + sqrt(d))/Q`` and
        ``Q`` dividing ``d - P**2``; the first repeated state closes the
        period. '''
    x = __.validate_argument_quadratic( x, 'x', cf_expand )
    if x.is_rational( ):
        return ContinuedFraction( _expand_rational( x.rat_part ) )
    scribe = __.acquire_scribe( __name__ )
    surd, denominator, radicand = _surd_state( x )
    root = __.isqrt( radicand )
    terms = [ ]
    seen = { }
    while ( surd, denominator ) not in seen:
        seen[ ( surd, denominator ) ] = len( terms )
        if 0 < denominator: term = ( surd + root ) // denominator
        else: term = -( ( surd + root ) // -denominator ) - 1
        terms.append( term )
        surd = term * denominator - surd
        denominator = ( radicand - surd * surd ) // denominator
    start = seen[ ( surd, denominator ) ]
    scribe.debug(
        f"Expansion of {x}: period of length {len( terms ) - start} "
        f"after {start} terms." )
    if 0 == start:
        return ContinuedFraction( terms[ : 1 ], terms[ 1 : ] + terms[ : 1 ] )
    return ContinuedFraction( terms[ : start ], terms[ start : ] )


@_our_interceptor
def cf_terms( cf ):
    ''' Iterates over partial quotients; infinitely for irrationals. '''
    __.validate_argument_class( cf, ContinuedFraction, 'cf', cf_terms )
    if cf.is_rational( ): return iter( cf.preperiod )
    return __.chain( cf.preperiod, __.cycle( cf.period ) )


@_our_interceptor
def cf_convergent( cf, k ):
    ''' Returns the k-th convergent ``p_k/q_k`` as a rational. '''
    __.validate_argument_class( cf, ContinuedFraction, 'cf', cf_convergent )
    __.validate_argument_nonnegativity( k, 'k', cf_convergent )
    if cf.is_rational( ) and k >= len( cf.preperiod ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'k', cf_convergent,
            f"index below length {len( cf.preperiod )} of finite expansion" )
    numerator, numerator_ = 1, 0
    denominator, denominator_ = 0, 1
    for term in __.islice( cf_terms( cf ), k + 1 ):
        numerator, numerator_ = term * numerator + numerator_, numerator
        denominator, denominator_ = (
            term * denominator + denominator_, denominator )
    return __.Fraction( numerator, denominator )


@_our_interceptor
def cf_value( cf ):
    ''' Exact value of a finite or eventually periodic expansion. '''
    __.validate_argument_class( cf, ContinuedFraction, 'cf', cf_value )
    if cf.is_rational( ):
        value = __.Fraction( cf.preperiod[ -1 ] )
        for term in reversed( cf.preperiod[ : -1 ] ):
            value = term + 1 / value
        return __.QuadraticNumber( value )
    # Purely periodic tail y = M(y): q*y**2 + (q' - p)*y - p' = 0.
    tail = _continuant_matrix( cf.period )
    p, p_, q, q_ = tail.a, tail.b, tail.c, tail.d
    discriminant = ( q_ - p ) ** 2 + 4 * q * p_
    tail_value = __.QuadraticNumber(
        __.Fraction( p - q_, 2 * q ), __.Fraction( 1, 2 * q ), discriminant )
    head = _continuant_matrix( cf.preperiod )
    return (
        ( head.a * tail_value + head.b )
        / ( head.c * tail_value + head.d ) )


def is_purely_periodic( cf ):
    ''' Is expansion purely periodic, once the integer part is folded in?

        True when the integer part is the only preperiod entry and the
        expansion does not terminate. '''
    return 1 == len( cf.preperiod ) and bool( cf.period )


#---------------------------- Modular Actions -------------------------------#


@_our_interceptor
def mobius_apply( matrix, x ):
    ''' Image ``(c + x*d)/(a + x*b)`` of exact value under integer matrix.

        Composition follows the matrix product:
        ``mobius_apply(M1 @ M2, x) == mobius_apply(M1, mobius_apply(M2, x))``.
        '''
    __.validate_argument_class(
        matrix, IntegerMatrix, 'matrix', mobius_apply )
    x = __.validate_argument_quadratic( x, 'x', mobius_apply )
    denominator = matrix.a + x * matrix.b
    if not denominator:
        raise __.our_exception_factory_provider( 'vanishing_denominator' )(
            f"Moebius image of {x} under {matrix}" )
    return ( matrix.c + x * matrix.d ) / denominator


@_our_interceptor
def cf_equivalent( x, y ):
    ''' Decides GL(2,Z)-equivalence of two quadratic irrationals.

        Returns ``( True, witness )`` with ``mobius_apply(witness, x) == y``
        exactly, or ``( False, None )``. The witness is composed from the
        partial quotients which precede a common tail on each side. '''
    x = __.validate_argument_irrationality( x, 'x', cf_equivalent )
    y = __.validate_argument_irrationality( y, 'y', cf_equivalent )
    scribe = __.acquire_scribe( __name__ )
    cf_x, cf_y = cf_expand( x ), cf_expand( y )
    if cf_x.canonical_period != cf_y.canonical_period:
        scribe.debug( f"Distinct tails: {cf_x} against {cf_y}." )
        return False, None
    period = cf_x.period
    rotation = next(
        offset for offset in range( len( period ) )
        if period[ offset : ] + period[ : offset ] == cf_y.period )
    leader_x = cf_x.preperiod + period[ : rotation ]
    standard = (
        _continuant_matrix( cf_y.preperiod )
        @ _continuant_matrix( leader_x ).inverse( ) )
    witness = ModularMatrix(
        standard.d, standard.c, standard.b, standard.a )
    if y != mobius_apply( witness, x ):
        raise __.our_exception_factory_provider( 'certificate_failure' )(
            f"witness {witness} does not map {x} to {y}", cf_equivalent )
    scribe.debug( f"Equivalence of {x} and {y} witnessed by {witness}." )
    return True, witness


@_our_interceptor
def reduced_representative( x ):
    ''' Value of the purely periodic expansion of the tail of x.

        The result is at least 1 and is equivalent to x. '''
    x = __.validate_argument_irrationality( x, 'x', reduced_representative )
    period = cf_expand( x ).period
    return cf_value( ContinuedFraction(
        period[ : 1 ], period[ 1 : ] + period[ : 1 ] ) )


#--------------------------------- Helpers ----------------------------------#


def _continuant_matrix( terms ):
    ''' Product of ``[[a, 1], [1, 0]]`` over terms. '''
    matrix = ModularMatrix.identity( )
    for term in terms: matrix = matrix @ ModularMatrix( term, 1, 1, 0 )
    return matrix


def _expand_rational( value ):
    terms = [ ]
    while True:
        term = value.__floor__( )
        terms.append( term )
        value -= term
        if 0 == value: break
        value = 1 / value
    if 1 < len( terms ) and 1 == terms[ -1 ]:
        terms.pop( )
        terms[ -1 ] += 1
    return terms


def _rotate_minimally( period ):
    if not period: return period
    return min(
        period[ offset : ] + period[ : offset ]
        for offset in range( len( period ) ) )


def _surd_state( x ):
    ''' Writes x as ``(P + sqrt(d))/Q`` with ``Q`` dividing ``d - P**2``. '''
    rat, surd = x.rat_part, x.surd_part
    common = rat.denominator * surd.denominator
    integral = rat.numerator * surd.denominator
    coefficient = surd.numerator * rat.denominator
    if 0 > coefficient:
        integral, coefficient, common = -integral, -coefficient, -common
    radicand = coefficient * coefficient * x.radicand
    if 0 != ( radicand - integral * integral ) % common:
        radicand *= common * common
        integral *= abs( common )
        common *= abs( common )
    return integral, common, radicand


def _validate_quotients( preperiod, period ):
    valid = (
            preperiod
        and all( isinstance( term, int ) for term in preperiod + period )
        and all( 1 <= term for term in preperiod[ 1 : ] + period ) )
    if valid and not period and 1 < len( preperiod ):
        valid = 2 <= preperiod[ -1 ]
    if valid: return
    raise __.our_exception_factory_provider( 'argument_validation' )(
        'preperiod', ContinuedFraction,
        'integer part followed by positive partial quotients '
        '(a finite expansion ending in at least 2)' )
