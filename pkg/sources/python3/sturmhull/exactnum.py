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


''' Exact arithmetic over the rationals and real quadratic fields.

    A :py:class:`QuadraticNumber` is ``a + b*sqrt(D)`` with rational ``a``
    and ``b`` and square-free ``D``. Rationals carry ``D = 1``. Order and
    floor are decided exactly, never through floats:

    .. code-block:: python

        >>> from sturmhull.exactnum import parse_quadratic, qn_floor_ceil
        >>> golden = parse_quadratic( '(1 + sqrt(5))/2' )
        >>> print( golden )
        1/2 + 1/2*sqrt(5)
        >>> golden * golden == golden + 1
        True
        >>> qn_floor_ceil( golden )
        (1, 2)
        >>> print( parse_quadratic( 'sqrt(12)' ) )
        2*sqrt(3)
    '''


from enum import Enum as _Enum

from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from fractions import Fraction
    from functools import lru_cache
    from math import gcd, isqrt

    import mpmath
    from sympy import factorint

    from .configuration import settings
    from .exceptionality import our_exception_factory_provider
    from .validators import validate_argument_class


#: Exact rationals are Python fractions (always reduced, positive denominator).
Rational = __.Fraction


class ArithmeticOperation( _Enum ):
    ''' Field operations accepted by :py:func:`qn_arith`. '''

    Add = 'add'
    Subtract = 'sub'
    Multiply = 'mul'
    Divide = 'div'


class QuadraticNumber( _ValueObject ):
    ''' Exact element ``rat_part + surd_part * sqrt(radicand)``.

        The radicand is reduced to its square-free part on construction; the
        extracted square moves into the surd coefficient. Values with a zero
        surd part are rationals and always carry radicand 1, so structural
        equality is value equality. '''

    __slots__ = ( 'rat_part', 'surd_part', 'radicand' )

    def __init__( self, rat_part = 0, surd_part = 0, radicand = 1 ):
        rat_part = _coerce_rational( rat_part, 'rat_part' )
        surd_part = _coerce_rational( surd_part, 'surd_part' )
        __.validate_argument_class(
            radicand, int, 'radicand', QuadraticNumber )
        if 0 > radicand:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'radicand', QuadraticNumber,
                'nonnegative integer (real quadratic fields only)' )
        if 0 == radicand: surd_part = __.Fraction( 0 )
        else:
            square, radicand = _split_square( radicand )
            surd_part *= square
        if 0 == surd_part or 1 == radicand:
            rat_part += surd_part if 1 == radicand else 0
            surd_part, radicand = __.Fraction( 0 ), 1
        self._establish(
            rat_part = rat_part, surd_part = surd_part, radicand = radicand )

    @classmethod
    def _assemble( kind, rat_part, surd_part, radicand ):
        ''' Builds value from parts over an already square-free radicand. '''
        self = object.__new__( kind )
        if 0 == surd_part: surd_part, radicand = __.Fraction( 0 ), 1
        self._establish(
            rat_part = rat_part, surd_part = surd_part, radicand = radicand )
        return self

    def is_rational( self ):
        ''' Is the value rational? '''
        return 0 == self.surd_part

    def is_integral( self ):
        ''' Is the value an integer? '''
        return 0 == self.surd_part and 1 == self.rat_part.denominator

    def as_rational( self ):
        ''' Returns value as a rational, if it is one. '''
        if self.is_rational( ): return self.rat_part
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'self', QuadraticNumber.as_rational, 'rational value' )

    def sign( self ):
        ''' Exact sign: -1, 0, or +1. '''
        return calculate_sign( self.rat_part, self.surd_part, self.radicand )

    def conjugate( self ):
        ''' Algebraic conjugate ``rat_part - surd_part * sqrt(radicand)``. '''
        return QuadraticNumber._assemble(
            self.rat_part, -self.surd_part, self.radicand )

    def norm( self ):
        ''' Field norm, a rational. '''
        return self.rat_part ** 2 - self.surd_part ** 2 * self.radicand

    def trace( self ):
        ''' Field trace, a rational. '''
        return 2 * self.rat_part

    def floor( self ):
        ''' Exact floor. '''
        if self.is_rational( ): return self.rat_part.__floor__( )
        denominator = _lcm(
            self.rat_part.denominator, self.surd_part.denominator )
        integral = self.rat_part.numerator * (
            denominator // self.rat_part.denominator )
        coefficient = self.surd_part.numerator * (
            denominator // self.surd_part.denominator )
        # Root of a nonsquare is irrational: strict bracketing by isqrt.
        root = __.isqrt( coefficient * coefficient * self.radicand )
        surd_floor = root if 0 < coefficient else -root - 1
        floor = ( integral + surd_floor ) // denominator
        if 0 > ( self - floor ).sign( ) or 0 <= ( self - floor - 1 ).sign( ):
            raise __.our_exception_factory_provider( 'invalid_state' )(
                f"Floor bracketing failed for {self}.", __package__ )
        return floor

    def ceil( self ):
        ''' Exact ceiling. '''
        floor = self.floor( )
        return floor if self.is_integral( ) else floor + 1

    def __floor__( self ): return self.floor( )

    def __ceil__( self ): return self.ceil( )

    def __bool__( self ): return 0 != self.rat_part or 0 != self.surd_part

    def __float__( self ): return float( qn_to_float( self, 64 ) )

    def __neg__( self ):
        return QuadraticNumber._assemble(
            -self.rat_part, -self.surd_part, self.radicand )

    def __pos__( self ): return self

    def __abs__( self ): return -self if 0 > self.sign( ) else self

    def __add__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        radicand = _unify_radicands( self, other, 'addition' )
        return QuadraticNumber._assemble(
            self.rat_part + other.rat_part,
            self.surd_part + other.surd_part, radicand )

    def __radd__( self, other ): return self.__add__( other )

    def __sub__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        return self.__add__( -other )

    def __rsub__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        return other.__add__( -self )

    def __mul__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        radicand = _unify_radicands( self, other, 'multiplication' )
        a, b = self.rat_part, self.surd_part
        c, d = other.rat_part, other.surd_part
        return QuadraticNumber._assemble(
            a * c + b * d * radicand, a * d + b * c, radicand )

    def __rmul__( self, other ): return self.__mul__( other )

    def __truediv__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        _unify_radicands( self, other, 'division' )
        if not other:
            raise __.our_exception_factory_provider( 'vanishing_denominator' )(
                f"quotient {self} / {other}" )
        norm = other.norm( )
        product = self * other.conjugate( )
        return QuadraticNumber._assemble(
            product.rat_part / norm, product.surd_part / norm,
            product.radicand )

    def __rtruediv__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        return other.__truediv__( self )

    def __pow__( self, exponent ):
        if not isinstance( exponent, int ): return NotImplemented
        if 0 > exponent: return QuadraticNumber( 1 ) / self ** -exponent
        result, base = QuadraticNumber( 1 ), self
        while exponent:
            if exponent & 1: result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _compare( self, other ):
        other = _admit_operand( other )
        if None is other: return None
        return ( self - other ).sign( )

    def __lt__( self, other ):
        sign = self._compare( other )
        return NotImplemented if None is sign else 0 > sign

    def __le__( self, other ):
        sign = self._compare( other )
        return NotImplemented if None is sign else 0 >= sign

    def __gt__( self, other ):
        sign = self._compare( other )
        return NotImplemented if None is sign else 0 < sign

    def __ge__( self, other ):
        sign = self._compare( other )
        return NotImplemented if None is sign else 0 <= sign

    def __eq__( self, other ):
        other = _admit_operand( other )
        if None is other: return NotImplemented
        return (
                self.rat_part == other.rat_part
            and self.surd_part == other.surd_part
            and self.radicand == other.radicand )

    def __hash__( self ):
        if self.is_rational( ): return hash( self.rat_part )
        return hash( ( self.rat_part, self.surd_part, self.radicand ) )

    def __str__( self ): return render_quadratic( self )


def surd( radicand ):
    ''' Returns ``sqrt(radicand)`` as an exact value. '''
    return QuadraticNumber( 0, 1, radicand )


def calculate_sign( rat_part, surd_part, radicand ):
    ''' Exact sign of ``rat_part + surd_part * sqrt(radicand)``.

        Parts may be integers or rationals. Decided by comparing
        ``rat_part**2`` against ``surd_part**2 * radicand`` when the two terms
        have opposite signs. '''
    rat_sign = ( 0 < rat_part ) - ( 0 > rat_part )
    surd_sign = ( 0 < surd_part ) - ( 0 > surd_part )
    if 0 == surd_sign or 0 == radicand: return rat_sign
    if 1 == radicand:
        total = rat_part + surd_part
        return ( 0 < total ) - ( 0 > total )
    if 0 == rat_sign or rat_sign == surd_sign: return surd_sign
    rat_square = rat_part * rat_part
    surd_square = surd_part * surd_part * radicand
    if rat_square == surd_square: return 0
    return rat_sign if rat_square > surd_square else surd_sign


@_our_interceptor
def qn_arith( x, y, operation ):
    ''' Exact field operation on two values of one quadratic field.

        The operation is an :py:class:`ArithmeticOperation` or its value:
        ``add``, ``sub``, ``mul``, ``div``. '''
    x = _validate_operand( x, 'x', qn_arith )
    y = _validate_operand( y, 'y', qn_arith )
    try: operation = ArithmeticOperation( operation )
    except ValueError:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'operation', qn_arith, "one of 'add', 'sub', 'mul', 'div'" )
    if ArithmeticOperation.Add is operation: return x + y
    if ArithmeticOperation.Subtract is operation: return x - y
    if ArithmeticOperation.Multiply is operation: return x * y
    return x / y


@_our_interceptor
def qn_sign( x ):
    ''' Exact sign of value: -1, 0, or +1. '''
    return _validate_operand( x, 'x', qn_sign ).sign( )


@_our_interceptor
def qn_floor_ceil( x ):
    ''' Exact floor and ceiling of value, as a pair of integers. '''
    x = _validate_operand( x, 'x', qn_floor_ceil )
    floor = x.floor( )
    return floor, ( floor if x.is_integral( ) else floor + 1 )


@_our_interceptor
def qn_conjugate( x ):
    ''' Algebraic conjugate of value. Rationals are their own conjugates. '''
    return _validate_operand( x, 'x', qn_conjugate ).conjugate( )


@_our_interceptor
def qn_to_float( x, precision = None ):
    ''' Approximates value as a multiprecision float.

        Relative error is below ``2**(1 - precision)``. When the two terms
        have opposite signs, the value is computed as norm over conjugate, so
        that no cancellation occurs. Never used to decide anything. '''
    x = _validate_operand( x, 'x', qn_to_float )
    if None is precision: precision = __.settings.float_precision
    __.validate_argument_class( precision, int, 'precision', qn_to_float )
    if 32 > precision:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'precision', qn_to_float, 'bit count of at least 32' )
    mpf = __.mpmath.mpf
    with __.mpmath.workprec( precision + 16 ):
        rat = mpf( x.rat_part.numerator ) / x.rat_part.denominator
        if x.is_rational( ): value = rat
        else:
            surd_term = mpf( x.surd_part.numerator ) * __.mpmath.sqrt(
                x.radicand ) / x.surd_part.denominator
            if 0 <= x.rat_part * x.surd_part: value = rat + surd_term
            else:
                norm = x.norm( )
                value = ( mpf( norm.numerator ) / norm.denominator ) / (
                    rat - surd_term )
    with __.mpmath.workprec( precision ): return +value


#-------------------------------- Literals ----------------------------------#


@_our_interceptor
def parse_quadratic( text ):
    ''' Parses exact literal into value.

        Accepts integers, fractions, ``sqrt(D)``, sums, differences,
        products, quotients, and parentheses, e.g. ``1/2 + 1/2*sqrt(5)`` or
        ``(1 + sqrt(5))/2``. Floats are rejected: exact input only. Failures
        carry the zero-based position of the offending character. '''
    __.validate_argument_class( text, str, 'text', parse_quadratic )
    parser = _LiteralParser( text )
    value = parser.parse_expression( )
    parser.expect_end( )
    return value


def render_quadratic( x ):
    ''' Renders value in canonical literal form ``p/q + r/s*sqrt(D)``. '''
    if x.is_rational( ): return str( x.rat_part )
    magnitude = abs( x.surd_part )
    surd_text = (
        f"sqrt({x.radicand})" if 1 == magnitude
        else f"{magnitude}*sqrt({x.radicand})" )
    if 0 == x.rat_part:
        return surd_text if 0 < x.surd_part else f"-{surd_text}"
    joint = '+' if 0 < x.surd_part else '-'
    return f"{x.rat_part} {joint} {surd_text}"


class _LiteralParser:
    ''' Recursive descent over the exact literal grammar.

        expression := term ( ( '+' | '-' ) term )*
        term := factor ( ( '*' | '/' ) factor )*
        factor := ( '+' | '-' ) factor | INTEGER | 'sqrt' '(' INTEGER ')'
                | '(' expression ')' '''

    _token_pattern = (
        r'\s*(?:(?P<float>\d*\.\d*(?:[eE][-+]?\d+)?|\d+[eE][-+]?\d+)'
        r'|(?P<integer>\d+)|(?P<sqrt>sqrt)|(?P<symbol>[-+*/()])'
        r'|(?P<junk>\S))' )

    def __init__( self, text ):
        import re
        self.text = text
        self.tokens = [ ]
        for match in re.finditer( self._token_pattern, text ):
            kind = match.lastgroup
            position = match.start( kind )
            if 'float' == kind:
                raise self._complain(
                    position, 'exact integer (floats are not accepted)' )
            if 'junk' == kind:
                raise self._complain(
                    position, 'integer, sqrt, operator, or parenthesis' )
            self.tokens.append( ( kind, match.group( kind ), position ) )
        self.index = 0

    def _complain( self, position, expectation ):
        return __.our_exception_factory_provider( 'parse_failure' )(
            self.text, position, expectation )

    def _peek( self ):
        if self.index < len( self.tokens ): return self.tokens[ self.index ]
        return ( 'end', '', len( self.text ) )

    def _advance( self ):
        token = self._peek( )
        self.index += 1
        return token

    def _expect_symbol( self, symbol ):
        kind, value, position = self._advance( )
        if 'symbol' != kind or symbol != value:
            raise self._complain( position, f"'{symbol}'" )

    def expect_end( self ):
        ''' Ensures all tokens have been consumed. '''
        kind, _, position = self._peek( )
        if 'end' != kind: raise self._complain( position, 'end of literal' )

    def parse_expression( self ):
        ''' Parses sum or difference of terms. '''
        value = self.parse_term( )
        while True:
            kind, symbol, _ = self._peek( )
            if 'symbol' != kind or symbol not in '+-': return value
            self._advance( )
            term = self.parse_term( )
            value = value + term if '+' == symbol else value - term

    def parse_term( self ):
        ''' Parses product or quotient of factors. '''
        value = self.parse_factor( )
        while True:
            kind, symbol, position = self._peek( )
            if 'symbol' != kind or symbol not in '*/': return value
            self._advance( )
            factor = self.parse_factor( )
            if '*' == symbol: value = value * factor
            elif factor: value = value / factor
            else: raise self._complain( position, 'nonzero divisor' )

    def parse_factor( self ):
        ''' Parses signed factor, integer, root, or parenthesized group. '''
        kind, value, position = self._advance( )
        if 'symbol' == kind and value in '+-':
            factor = self.parse_factor( )
            return factor if '+' == value else -factor
        if 'integer' == kind: return QuadraticNumber( int( value ) )
        if 'sqrt' == kind:
            self._expect_symbol( '(' )
            kind, radicand, position = self._advance( )
            if 'integer' != kind:
                raise self._complain( position, 'integer radicand' )
            self._expect_symbol( ')' )
            return surd( int( radicand ) )
        if 'symbol' == kind and '(' == value:
            group = self.parse_expression( )
            self._expect_symbol( ')' )
            return group
        raise self._complain( position, 'integer, sqrt, or parenthesis' )


#--------------------------------- Helpers ----------------------------------#


def _coerce_rational( value, name ):
    if isinstance( value, __.Fraction ): return value
    if isinstance( value, int ) and not isinstance( value, bool ):
        return __.Fraction( value )
    raise __.our_exception_factory_provider( 'argument_validation' )(
        name, QuadraticNumber, 'integer or exact rational' )


def _admit_operand( value ):
    if isinstance( value, QuadraticNumber ): return value
    if isinstance( value, bool ): return None
    if isinstance( value, ( int, __.Fraction ) ):
        return QuadraticNumber._assemble( __.Fraction( value ), 0, 1 )
    return None


def _validate_operand( value, name, invocation ):
    operand = _admit_operand( value )
    if None is not operand: return operand
    raise __.our_exception_factory_provider( 'argument_validation' )(
        name, invocation, 'quadratic number, integer, or exact rational' )


def _unify_radicands( x, y, operation ):
    if x.radicand == y.radicand or 1 == y.radicand: return x.radicand
    if 1 == x.radicand: return y.radicand
    raise __.our_exception_factory_provider( 'radicand_mismatch' )(
        x.radicand, y.radicand, operation )


def _lcm( x, y ): return x // __.gcd( x, y ) * y


@__.lru_cache( maxsize = 1024 )
def _split_square( radicand ):
    ''' Splits radicand into square root of its square part and free part. '''
    square, free = 1, 1
    for prime, multiplicity in __.factorint( radicand ).items( ):
        square *= prime ** ( multiplicity // 2 )
        free *= prime ** ( multiplicity % 2 )
    return int( square ), int( free )
