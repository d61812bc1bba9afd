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


''' Sturmian words, cutting sequences, factors, and the shift.

    The symbol at index ``n`` is ``C(n*alpha + rho) - C((n-1)*alpha + rho)``
    where ``C`` is the ceiling on the upper branch and ``floor + 1`` on the
    lower branch. The branches differ only at singular intercepts:

    .. code-block:: python

        >>> from sturmhull.exactnum import parse_quadratic
        >>> from sturmhull.words import Branch, SturmianParams, sturmian_block
        >>> alpha = parse_quadratic( '(3 - sqrt(5))/2' )
        >>> upper = SturmianParams( alpha, 0, Branch.Upper )
        >>> lower = SturmianParams( alpha, 0, Branch.Lower )
        >>> str( sturmian_block( upper, -3, 4 ) )
        '0100101'
        >>> str( sturmian_block( lower, -3, 4 ) )
        '0101001'
    '''


from enum import Enum as _Enum

from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from collections.abc import Iterable
    from functools import lru_cache

    from .configuration import acquire_scribe
    from .exactnum import calculate_sign
    from .exceptionality import our_exception_factory_provider
    from .validators import (
        validate_argument_class,
        validate_argument_irrationality,
        validate_argument_positivity,
        validate_argument_unit_interval,
    )


class Branch( _Enum ):
    ''' Reading of the ceiling formula at singular intercepts. '''

    Upper = 'upper'
    Lower = 'lower'


class SturmianParams( _ValueObject ):
    ''' Slope, intercept, and branch of a sturmian word. '''

    __slots__ = ( 'alpha', 'rho', 'branch' )

    def __init__( self, alpha, rho, branch = Branch.Upper ):
        alpha = __.validate_argument_irrationality(
            alpha, 'alpha', SturmianParams )
        alpha = __.validate_argument_unit_interval(
            alpha, 'alpha', SturmianParams )
        rho = __.validate_argument_unit_interval(
            rho, 'rho', SturmianParams, closed_low = True )
        if not rho.is_rational( ) and rho.radicand != alpha.radicand:
            raise __.our_exception_factory_provider( 'radicand_mismatch' )(
                alpha.radicand, rho.radicand, 'sturmian parameters' )
        try: branch = Branch( branch )
        except ValueError:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'branch', SturmianParams, "'upper' or 'lower'" ) from None
        self._establish( alpha = alpha, rho = rho, branch = branch )


class Word( _ValueObject ):
    ''' Finite word positioned in Z: symbol ``k`` sits at ``base_index + k``.

        Symbols are integers for sturmian words and letters (strings) for
        substitution words. '''

    __slots__ = ( 'symbols', 'base_index' )

    def __init__( self, symbols, base_index = 0 ):
        __.validate_argument_class(
            symbols, __.Iterable, 'symbols', Word )
        __.validate_argument_class( base_index, int, 'base_index', Word )
        self._establish( symbols = tuple( symbols ), base_index = base_index )

    def __len__( self ): return len( self.symbols )

    def __iter__( self ): return iter( self.symbols )

    def __getitem__( self, index ): return self.symbols[ index ]

    def __str__( self ): return ''.join( map( str, self.symbols ) )


#------------------------------- Generation ---------------------------------#


@_our_interceptor
def sturmian_symbol( params, n ):
    ''' Symbol of index n, decided exactly. '''
    __.validate_argument_class(
        params, SturmianParams, 'params', sturmian_symbol )
    __.validate_argument_class( n, int, 'n', sturmian_symbol )
    return (
        count_crossings( params, n ) - count_crossings( params, n - 1 ) )


@_our_interceptor
def sturmian_block( params, start, stop ):
    ''' Symbols of indices in ``[start, stop)``, as a word.

        Only the first crossing count is computed through an exact floor;
        the rest advance by integer sign tests. '''
    __.validate_argument_class(
        params, SturmianParams, 'params', sturmian_block )
    __.validate_argument_class( start, int, 'start', sturmian_block )
    __.validate_argument_class( stop, int, 'stop', sturmian_block )
    if stop < start:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'stop', sturmian_block, 'index not below start' )
    return Word( _generate_symbols( params, start, stop ), start )


def count_crossings( params, n ):
    ''' Exact ``C(n*alpha + rho)`` for the branch of the parameters.

        The symbol of index n is the increment of this count. '''
    value = n * params.alpha + params.rho
    if Branch.Upper is params.branch: return value.ceil( )
    return value.floor( ) + 1


@_our_interceptor
def cutting_sequence( alpha, rho, start, stop, branch = Branch.Lower ):
    ''' Coding of the crossings of ``y = alpha*x + rho`` with lines ``y = m``.

        The symbol of step n is 1 when a crossing occurs for x in
        ``(n - 1, n]`` (lower branch) or in ``[n - 1, n)`` (upper branch).
        Crossing abscissas ``(m - rho)/alpha`` are computed exactly, without
        reference to the ceiling formula. '''
    params = SturmianParams( alpha, rho, branch )
    __.validate_argument_class( start, int, 'start', cutting_sequence )
    __.validate_argument_class( stop, int, 'stop', cutting_sequence )
    if stop < start:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'stop', cutting_sequence, 'index not below start' )
    symbols = [ 0 ] * ( stop - start )
    if not symbols: return Word( symbols, start )
    alpha, rho = params.alpha, params.rho
    lowest = ( ( start - 1 ) * alpha + rho ).floor( )
    highest = ( stop * alpha + rho ).ceil( )
    for level in range( lowest, highest + 1 ):
        abscissa = ( level - rho ) / alpha
        if Branch.Lower is params.branch: step = abscissa.ceil( )
        else: step = abscissa.floor( ) + 1
        if start <= step < stop: symbols[ step - start ] = 1
    return Word( symbols, start )


@_our_interceptor
def singular_index( params ):
    ''' Index n with ``n*alpha + rho`` integral, if any.

        At most one such index exists for irrational slope. The two branches
        differ exactly at symbols n and n + 1. '''
    __.validate_argument_class(
        params, SturmianParams, 'params', singular_index )
    alpha, rho = params.alpha, params.rho
    ratio = -rho.surd_part / alpha.surd_part
    if 1 != ratio.denominator: return None
    index = ratio.numerator
    if ( index * alpha + rho ).is_integral( ): return index
    return None


@_our_interceptor
def shift_params( params ):
    ''' Parameters of the shifted word: intercept advanced by the slope.

        The branch is kept: the singular crossing moves one index down. '''
    __.validate_argument_class(
        params, SturmianParams, 'params', shift_params )
    rho = params.rho + params.alpha
    if 0 <= ( rho - 1 ).sign( ): rho = rho - 1
    return SturmianParams( params.alpha, rho, params.branch )


#-------------------------------- Analysis ----------------------------------#


@_our_interceptor
def complexity( params, n ):
    ''' Number of distinct factors of length n of the bi-infinite word.

        Factors are counted on a centered block, which doubles until the
        count is stable across one doubling. '''
    __.validate_argument_class( params, SturmianParams, 'params', complexity )
    __.validate_argument_positivity( n, 'n', complexity )
    scribe = __.acquire_scribe( __name__ )
    length = max( 256, 16 * n )
    count = len( _count_factors( params, length, n ) )
    while True:
        length *= 2
        count_ = len( _count_factors( params, length, n ) )
        scribe.debug(
            f"Complexity {n}: {count_} factors on block of {length}." )
        if count_ == count: return count
        count = count_


def factors( word, n ):
    ''' Distinct factors of length n of a finite word, as tuples. '''
    symbols = tuple( word )
    return frozenset(
        symbols[ index : index + n ]
        for index in range( len( symbols ) - n + 1 ) )


def is_balanced( words ):
    ''' Do counts of symbol 1 differ by at most 1 across equal lengths? '''
    ranges = { }
    for word in words:
        ones = count_ones( word )
        low, high = ranges.get( len( word ), ( ones, ones ) )
        ranges[ len( word ) ] = ( min( low, ones ), max( high, ones ) )
    return all( high - low <= 1 for low, high in ranges.values( ) )


def count_ones( word ):
    ''' Number of occurrences of symbol 1. '''
    return sum( 1 for symbol in word if 1 == symbol )


#--------------------------------- Helpers ----------------------------------#


def _generate_symbols( params, start, stop ):
    if stop == start: return ( )
    alpha, rho = params.alpha, params.rho
    common = (
        alpha.rat_part.denominator * alpha.surd_part.denominator
        * rho.rat_part.denominator * rho.surd_part.denominator )
    slope_rat = int( alpha.rat_part * common )
    slope_surd = int( alpha.surd_part * common )
    offset_rat = int( rho.rat_part * common )
    offset_surd = int( rho.surd_part * common )
    radicand = alpha.radicand
    threshold = 0 if Branch.Upper is params.branch else -1
    crossings = count_crossings( params, start - 1 )
    symbols = [ ]
    for index in range( start, stop ):
        # Sign of index*alpha + rho - crossings, scaled by the denominator.
        sign = __.calculate_sign(
            index * slope_rat + offset_rat - crossings * common,
            index * slope_surd + offset_surd, radicand )
        if sign > threshold:
            crossings += 1
            symbols.append( 1 )
        else: symbols.append( 0 )
    return tuple( symbols )


@__.lru_cache( maxsize = 64 )
def _centered_block( params, length ):
    return _generate_symbols( params, -( length // 2 ), length - length // 2 )


def _count_factors( params, length, n ):
    return factors( _centered_block( params, length ), n )
