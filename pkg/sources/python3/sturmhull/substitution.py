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


''' Substitution rules: iteration, primitivity, Perron data, fixed points.

    .. code-block:: python

        >>> from sturmhull.substitution import FIBONACCI, apply, perron
        >>> str( apply( FIBONACCI, 'a', 3 ) )
        'bab'
        >>> data = perron( FIBONACCI )
        >>> print( data.eigenvalue )
        1/2 + 1/2*sqrt(5)
        >>> [ str( length ) for length in data.left_eigenvector ]
        ['1', '1/2 + 1/2*sqrt(5)']
    '''


from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from collections.abc import Mapping
    import re
    from fractions import Fraction
    from math import isqrt

    import numpy
    from sympy import ImmutableMatrix

    from .configuration import acquire_scribe, settings
    from .confrac import cf_equivalent, cf_expand, reduced_representative
    from .exactnum import QuadraticNumber
    from .exceptionality import our_exception_factory_provider
    from .validators import (
        validate_argument_class,
        validate_argument_irrationality,
        validate_argument_nonnegativity,
        validate_argument_positivity,
        validate_argument_unit_interval,
    )
    from .words import (
        Branch,
        SturmianParams,
        Word,
        factors,
        sturmian_block,
    )


class SubstitutionRule( _ValueObject ):
    ''' Map from letters to nonempty words over an ordered alphabet.

        The alphabet follows the order of the given mapping. Letters are any
        hashable symbols: characters for textual rules, integers for rules
        acting on sturmian words. '''

    __slots__ = ( 'alphabet', 'images' )

    def __init__( self, images ):
        __.validate_argument_class(
            images, __.Mapping, 'images', SubstitutionRule )
        alphabet = tuple( images )
        images_ = [ ]
        for letter in alphabet:
            image = tuple( images[ letter ] )
            if not image or not set( image ) <= set( alphabet ):
                raise __.our_exception_factory_provider(
                    'argument_validation' )(
                        'images', SubstitutionRule,
                        'nonempty images over the declared alphabet' )
            images_.append( image )
        if not alphabet:
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'images', SubstitutionRule, 'nonempty mapping' )
        self._establish( alphabet = alphabet, images = tuple( images_ ) )

    def image( self, letter ):
        ''' Image of letter, as a tuple of letters. '''
        return self.images[ self.alphabet.index( letter ) ]

    def __str__( self ): return render_rule( self )


class ComposedRule( _ValueObject ):
    ''' Composition of rules over one alphabet, kept as its factors.

        Factors are ordered outermost first, so that a letter x maps to
        ``f0(f1(...(x)))``. Images are only formed as far as they are asked
        for, and the substitution matrix is the product of the factor
        matrices. The radicand, when known, is the square-free radicand of
        the quadratic field holding the expansion factor. '''

    __slots__ = ( 'alphabet', 'factors', 'radicand' )

    def __init__( self, factors, radicand = None ):
        factors = tuple( factors )
        for factor in factors:
            __.validate_argument_class(
                factor, SubstitutionRule, 'factors', ComposedRule )
        if not factors or any(
            factor.alphabet != factors[ 0 ].alphabet for factor in factors
        ):
            raise __.our_exception_factory_provider( 'argument_validation' )(
                'factors', ComposedRule, 'nonempty rules over one alphabet' )
        if None is not radicand:
            __.validate_argument_positivity(
                radicand, 'radicand', ComposedRule )
        self._establish(
            alphabet = factors[ 0 ].alphabet, factors = factors,
            radicand = radicand )

    def image( self, letter ):
        ''' Image of letter, formed in full. '''
        return _substitute( self, ( letter, ) )

    def expand( self ):
        ''' Explicit rule with the same images. '''
        rule = self.factors[ -1 ]
        for factor in reversed( self.factors[ : -1 ] ):
            rule = compose( factor, rule )
        return rule

    def __str__( self ): return render_rule( self )


_rule_classes = ( SubstitutionRule, ComposedRule )


class PerronData( _ValueObject ):
    ''' Dominant eigenvalue and natural tile lengths of a primitive rule.

        The left eigenvector is normalized so that the first letter has
        length 1. Values are exact quadratic numbers for alphabets of at most
        two letters; otherwise they are floats, and ``error_bound`` bounds
        the error of the eigenvalue. '''

    __slots__ = (
        'alphabet', 'eigenvalue', 'left_eigenvector', 'exact', 'error_bound' )

    def __init__(
        self, alphabet, eigenvalue, left_eigenvector,
        exact = True, error_bound = 0.0
    ):
        self._establish(
            alphabet = tuple( alphabet ), eigenvalue = eigenvalue,
            left_eigenvector = tuple( left_eigenvector ),
            exact = exact, error_bound = error_bound )

    def length_of( self, letter ):
        ''' Natural length of the tile of letter. '''
        return self.left_eigenvector[ self.alphabet.index( letter ) ]


#----------------------------- Rule Algebra ---------------------------------#


@_our_interceptor
def apply( rule, word, k = 1 ):
    ''' Image of word under the k-th power of rule. '''
    __.validate_argument_class( rule, _rule_classes, 'rule', apply )
    __.validate_argument_nonnegativity( k, 'k', apply )
    base_index = word.base_index if isinstance( word, __.Word ) else 0
    symbols = tuple( word )
    for _ in range( k ): symbols = _substitute( rule, symbols )
    return __.Word( symbols, base_index )


def compose( outer, inner ):
    ''' Rule sending each letter x to ``outer(inner(x))``. '''
    return SubstitutionRule( {
        letter: apply( outer, inner.image( letter ) ).symbols
        for letter in inner.alphabet } )


@_our_interceptor
def abelianization( rule ):
    ''' Integer matrix counting letter i in the image of letter j.

        For composed rules, the product of the factor matrices. '''
    __.validate_argument_class(
        rule, _rule_classes, 'rule', abelianization )
    if isinstance( rule, ComposedRule ):
        matrix = abelianization( rule.factors[ 0 ] )
        for factor in rule.factors[ 1 : ]:
            matrix = matrix * abelianization( factor )
        return matrix
    return __.ImmutableMatrix(
        len( rule.alphabet ), len( rule.alphabet ),
        lambda row, column: rule.images[ column ].count(
            rule.alphabet[ row ] ) )


@_our_interceptor
def is_primitive( rule ):
    ''' Returns ``( True, N )`` with the least N such that ``M**N > 0``.

        Returns ``( False, None )`` when no power up to ``(k - 1)**2 + 1``
        is positive, for alphabets of k letters. '''
    __.validate_argument_class(
        rule, _rule_classes, 'rule', is_primitive )
    matrix = abelianization( rule )
    bound = ( len( rule.alphabet ) - 1 ) ** 2 + 1
    power = matrix
    for exponent in range( 1, bound + 1 ):
        if all( 0 < entry for entry in power ): return True, exponent
        power = power * matrix
    return False, None


@_our_interceptor
def perron( rule ):
    ''' Perron eigenvalue and left eigenvector of a primitive rule.

        Solves the characteristic quadratic exactly for two letters. Larger
        alphabets use power iteration, bracketed by Collatz-Wielandt bounds.
        '''
    __.validate_argument_class( rule, _rule_classes, 'rule', perron )
    if not is_primitive( rule )[ 0 ]:
        raise __.our_exception_factory_provider( 'nonprimitive_rule' )(
            rule, perron )
    matrix = abelianization( rule )
    size = len( rule.alphabet )
    if 1 == size:
        data = PerronData(
            rule.alphabet, __.QuadraticNumber( int( matrix[ 0, 0 ] ) ),
            ( __.QuadraticNumber( 1 ), ) )
    elif 2 == size:
        radicand = (
            rule.radicand if isinstance( rule, ComposedRule ) else None )
        data = _perron_exactly( rule.alphabet, matrix, radicand )
    else: data = _perron_approximately( rule.alphabet, matrix )
    if data.eigenvalue <= 1:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'rule', perron, 'substitution with expansion factor above 1' )
    return data


@_our_interceptor
def is_pisot( data ):
    ''' Is the exact eigenvalue a Pisot number?

        A rational eigenvalue above 1 counts as Pisot: it has no conjugate.
        '''
    __.validate_argument_class( data, PerronData, 'data', is_pisot )
    if not data.exact:
        raise __.our_exception_factory_provider( 'inexact_data' )(
            'data', is_pisot )
    eigenvalue = data.eigenvalue
    if 0 >= ( eigenvalue - 1 ).sign( ): return False
    if eigenvalue.is_rational( ): return True
    conjugate = eigenvalue.conjugate( )
    return 0 > ( conjugate - 1 ).sign( ) and 0 < ( conjugate + 1 ).sign( )


@_our_interceptor
def fixed_point_prefix( rule, seed, length ):
    ''' First letters of the one-sided fixed point of a power of rule.

        The rule must be primitive. The least power ``p`` up to the alphabet
        size for which ``σ^p(seed)`` begins with seed and is longer than one
        letter is iterated on a truncated prefix until it reaches the
        requested length. '''
    __.validate_argument_class(
        rule, _rule_classes, 'rule', fixed_point_prefix )
    __.validate_argument_positivity( length, 'length', fixed_point_prefix )
    if seed not in rule.alphabet:
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'seed', fixed_point_prefix, 'letter of the rule alphabet' )
    if not is_primitive( rule )[ 0 ]:
        raise __.our_exception_factory_provider( 'nonprimitive_rule' )(
            rule, fixed_point_prefix )
    power = _find_prefix_power( rule, seed )
    if None is power:
        raise __.our_exception_factory_provider( 'absent_fixed_prefix' )(
            seed, fixed_point_prefix )
    word = ( seed, )
    while len( word ) < length:
        for _ in range( power ): word = _substitute( rule, word, length )
    return __.Word( word[ : length ] )


@_our_interceptor
def lengths_of_iterates( rule, lengths, n ):
    ''' Exact lengths of ``σ^k(letter)`` for ``k`` from 0 through n.

        Letters carry the given lengths (a sequence in alphabet order). The
        result has one tuple of per-letter lengths for each level. '''
    __.validate_argument_class(
        rule, _rule_classes, 'rule', lengths_of_iterates )
    __.validate_argument_nonnegativity( n, 'n', lengths_of_iterates )
    level = tuple( lengths )
    if len( level ) != len( rule.alphabet ):
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'lengths', lengths_of_iterates, 'one length per letter' )
    counts = abelianization( rule ).tolist( )
    levels = [ level ]
    for _ in range( n ):
        level = tuple(
            sum(
                ( length * int( count )
                  for length, count in zip( level, column ) ),
                0 * level[ 0 ] )
            for column in zip( *counts ) )
        levels.append( level )
    return tuple( levels )


#------------------------------ Text Format ---------------------------------#


@_our_interceptor
def parse_rule( text ):
    ''' Parses rule from productions such as ``a>b; b>ab``.

        Letters are single non-space characters other than ``>`` and ``;``.
        '''
    __.validate_argument_class( text, str, 'text', parse_rule )
    productions = [ ]
    offset = 0
    for production in text.split( ';' ):
        match = __.re.fullmatch( _production_pattern, production )
        if None is match:
            position = offset + len( production ) - len(
                production.lstrip( ) )
            raise __.our_exception_factory_provider( 'parse_failure' )(
                text, position, "production of form 'letter>word'" )
        productions.append( (
            match[ 'letter' ], match[ 'image' ],
            offset + match.start( 'letter' ),
            offset + match.start( 'image' ) ) )
        offset += len( production ) + 1
    alphabet = [ ]
    for letter, _, position, _ in productions:
        if letter in alphabet:
            raise __.our_exception_factory_provider( 'parse_failure' )(
                text, position, 'one production per letter' )
        alphabet.append( letter )
    for _, image, _, position in productions:
        for index, symbol in enumerate( image ):
            if symbol in alphabet: continue
            raise __.our_exception_factory_provider( 'parse_failure' )(
                text, position + index, 'letter with a production' )
    return SubstitutionRule( {
        letter: image for letter, image, _, _ in productions } )


_production_pattern = r'\s*(?P<letter>[^\s>;])\s*>\s*(?P<image>[^\s>;]+)\s*'


def render_rule( rule ):
    ''' Renders rule in production form, e.g. ``a>b; b>ab``.

        Composed rules render their factors, outermost first, joined by
        `` o ``. '''
    if isinstance( rule, ComposedRule ):
        return ' o '.join(
            f"({render_rule( factor )})" for factor in rule.factors )
    return '; '.join(
        "{}>{}".format( letter, ''.join( map( str, image ) ) )
        for letter, image in zip( rule.alphabet, rule.images ) )


#: The Fibonacci rule ``a>b; b>ab``, of expansion factor the golden mean.
FIBONACCI = SubstitutionRule( { 'a': 'b', 'b': 'ab' } )


#------------------------ Substitutive Representatives ----------------------#


def elementary_morphism( quotient ):
    ''' Sturmian morphism ``0 -> 0^(a-1) 1``, ``1 -> 0^a 1`` for quotient a.

        Its matrix is ``[[a-1, a], [1, 1]]``, of determinant -1. '''
    return SubstitutionRule( {
        0: ( 0, ) * ( quotient - 1 ) + ( 1, ),
        1: ( 0, ) * quotient + ( 1, ) } )


@_our_interceptor
def validate_language_invariance( rule, word, depth ):
    ''' Do word and its image have the same n+1 factors for each n <= depth?

        The word should be long enough to carry every factor of its language
        up to length ``depth + 1``. Only a prefix of the image, four times as
        long as the word, is formed. '''
    __.validate_argument_class(
        rule, _rule_classes, 'rule', validate_language_invariance )
    __.validate_argument_positivity(
        depth, 'depth', validate_language_invariance )
    scribe = __.acquire_scribe( __name__ )
    symbols = tuple( word )
    image = _substitute( rule, symbols, 4 * len( symbols ) )
    for n in range( 1, depth + 1 ):
        word_factors = __.factors( symbols, n )
        image_factors = __.factors( image, n )
        if n + 1 == len( word_factors ) and word_factors == image_factors:
            continue
        scribe.debug(
            f"Language of {rule} differs at length {n}: "
            f"{len( word_factors )} against {len( image_factors )} factors." )
        return False
    return True


@_our_interceptor
def substitutive_representative( alpha ):
    ''' Equivalent slope with purely periodic expansion, and its rule.

        The slope is ``beta = 1/r``, where r is the value of the purely
        periodic tail of alpha, so ``beta = [0; (a1, ..., ak)]``. The rule
        is the composition of elementary morphisms for ``a1, ..., ak``, and
        is accepted only after the factors of a sturmian word of slope beta
        are found invariant under it.

        The rule is explicit when its images hold at most
        ``STURMHULL_IMAGE_LIMIT`` letters in all. Otherwise it is a
        :py:class:`ComposedRule`, since image lengths grow exponentially
        with the period. '''
    alpha = __.validate_argument_irrationality(
        alpha, 'alpha', substitutive_representative )
    alpha = __.validate_argument_unit_interval(
        alpha, 'alpha', substitutive_representative )
    scribe = __.acquire_scribe( __name__ )
    beta = 1 / __.reduced_representative( alpha )
    rule = ComposedRule(
        map( elementary_morphism, __.cf_expand( alpha ).period ),
        beta.radicand )
    if sum( abelianization( rule ) ) <= __.settings.image_limit:
        rule = rule.expand( )
    if not __.cf_equivalent( alpha, beta )[ 0 ]:
        raise __.our_exception_factory_provider( 'certificate_failure' )(
            f"slope {beta} is not equivalent to {alpha}",
            substitutive_representative )
    depth = __.settings.language_depth
    word = language_sample( beta, depth + 1 )
    if not validate_language_invariance( rule, word, depth ):
        raise __.our_exception_factory_provider( 'certificate_failure' )(
            f"rule {rule} does not preserve the language of slope {beta}",
            substitutive_representative )
    scribe.debug( f"Slope {alpha} represented by {beta} under {rule}." )
    return beta, rule


@_our_interceptor
def language_sample( beta, span ):
    ''' Sturmian block which carries all ``span + 1`` factors of length span.

        The block has slope beta and intercept 1/2, and is doubled in length
        until it is complete. '''
    beta = __.validate_argument_irrationality( beta, 'beta', language_sample )
    __.validate_argument_positivity( span, 'span', language_sample )
    params = __.SturmianParams(
        beta, __.Fraction( 1, 2 ), __.Branch.Upper )
    length = max( 2048, 64 * span )
    while True:
        block = __.sturmian_block( params, 0, length )
        if all(
            n + 1 == len( __.factors( block, n ) )
            for n in range( 1, span + 1 )
        ): return block
        length *= 2


#--------------------------------- Helpers ----------------------------------#


def _substitute( rule, symbols, limit = None ):
    ''' Image of symbols, factor by factor, cut to limit letters if given.
    '''
    factors = rule.factors if isinstance( rule, ComposedRule ) else ( rule, )
    for factor in reversed( factors ):
        image = [ ]
        for symbol in symbols:
            image.extend( factor.image( symbol ) )
            if None is not limit and limit <= len( image ): break
        symbols = tuple( image if None is limit else image[ : limit ] )
    return symbols


def _find_prefix_power( rule, seed ):
    word = ( seed, )
    for power in range( 1, len( rule.alphabet ) + 1 ):
        word = _substitute( rule, word, 2 )
        if seed == word[ 0 ] and 1 < len( word ): return power
    return None


def _perron_exactly( alphabet, matrix, radicand = None ):
    trace = int( matrix[ 0, 0 ] + matrix[ 1, 1 ] )
    determinant = int( matrix.det( ) )
    discriminant = trace * trace - 4 * determinant
    surd_part, radicand_ = __.Fraction( 1, 2 ), discriminant
    # Discriminant is radicand times a square when the radicand is known.
    if None is not radicand and 0 == discriminant % radicand:
        root = __.isqrt( discriminant // radicand )
        if root * root * radicand == discriminant:
            surd_part, radicand_ = __.Fraction( root, 2 ), radicand
    eigenvalue = __.QuadraticNumber(
        __.Fraction( trace, 2 ), surd_part, radicand_ )
    second = ( eigenvalue - int( matrix[ 0, 0 ] ) ) / int( matrix[ 1, 0 ] )
    return PerronData(
        alphabet, eigenvalue, ( __.QuadraticNumber( 1 ), second ) )


def _perron_approximately( alphabet, matrix ):
    scribe = __.acquire_scribe( __name__ )
    transpose = __.numpy.array( matrix.T.tolist( ), dtype = float )
    vector = __.numpy.ones( len( alphabet ) )
    low, high = 0.0, float( 'inf' )
    for iteration in range( 10000 ):
        image = transpose @ vector
        ratios = image / vector
        low, high = float( ratios.min( ) ), float( ratios.max( ) )
        vector = image / image[ 0 ]
        if high - low < 1e-12 * high: break
    scribe.debug(
        f"Power iteration stopped after {iteration + 1} steps "
        f"with eigenvalue in [{low}, {high}]." )
    return PerronData(
        alphabet, ( low + high ) / 2,
        tuple( float( entry ) for entry in vector ),
        exact = False, error_bound = ( high - low ) / 2 )
