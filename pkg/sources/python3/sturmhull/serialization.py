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


''' JSON encodings of exact values, verdicts, and tiling specifications.

    Encoders produce plain structures of lists, dictionaries, strings, and
    integers; :py:func:`dumps` renders them with sorted keys, so equal
    values always produce identical text. Decoders accept what the encoders
    produce and, wherever an exact number is expected, also a literal such
    as ``"sqrt(2) - 1"``.

    .. code-block:: python

        >>> from sturmhull.exactnum import parse_quadratic
        >>> from sturmhull.serialization import dumps, encode_quadratic
        >>> print( dumps( encode_quadratic( parse_quadratic( '(1 + sqrt(5))/2' ) ) ) )
        {"D":5,"rat":[1,2],"surd":[1,2]}

    Rational values alone, where the field is known to be rational, encode
    as ``[p, q]``.
    ''' # pylint: disable=line-too-long


from .factories import NamespaceClass as _NamespaceClass
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from fractions import Fraction
    import json

    from .apcomplex import APGraph, CollaredTile, Edge
    from .confrac import ContinuedFraction, IntegerMatrix, ModularMatrix
    from .cps import CutProjectScheme
    from .equivalence import EquivalenceVerdict, SubstitutiveCertificate
    from .exactnum import QuadraticNumber, parse_quadratic
    from .exceptionality import our_exception_factory_provider
    from .exceptions import IncorrectData
    from .hull import (
        DistanceBounds,
        OriginTag,
        PeriodicSource,
        ReturnModule,
        SturmianSource,
        SubstitutionSource,
        Tiling,
        TorusPoint,
    )
    from .substitution import (
        ComposedRule,
        SubstitutionRule,
        parse_rule,
        render_rule,
    )
    from .validators import validate_argument_class
    from .words import SturmianParams, Word


#----------------------------------- Text -----------------------------------#


def dumps( document ):
    ''' Renders encoded document as compact JSON with sorted keys. '''
    return __.json.dumps(
        document, separators = ( ',', ':' ), sort_keys = True )


@_our_interceptor
def loads( text ):
    ''' Parses JSON text into a plain document. '''
    __.validate_argument_class( text, str, 'text', loads )
    try: return __.json.loads( text )
    except __.json.JSONDecodeError as exc:
        raise __.our_exception_factory_provider( 'parse_failure' )(
            text, exc.pos, f"JSON document ({exc.msg})" ) from None


#--------------------------------- Numbers ----------------------------------#


def encode_rational( value ):
    ''' Encodes rational as ``[numerator, denominator]``. '''
    value = __.Fraction( value )
    return [ value.numerator, value.denominator ]


def decode_rational( document ):
    ''' Decodes rational from pair or literal. '''
    if isinstance( document, str ):
        value = __.parse_quadratic( document )
        if value.is_rational( ): return value.rat_part
    elif (  isinstance( document, list ) and 2 == len( document )
        and all( _is_integer( entry ) for entry in document )
        and 0 != document[ 1 ]
    ): return __.Fraction( *document )
    raise _malformed( 'rational', decode_rational )


def encode_quadratic( value ):
    ''' Encodes quadratic number by its parts and radicand. '''
    return {
        'rat': encode_rational( value.rat_part ),
        'surd': encode_rational( value.surd_part ),
        'D': value.radicand }


def decode_quadratic( document ):
    ''' Decodes quadratic number from parts, literal, or integer. '''
    if isinstance( document, str ): return __.parse_quadratic( document )
    if _is_integer( document ): return __.QuadraticNumber( document )
    if not isinstance( document, dict ) or not _is_integer(
        document.get( 'D' )
    ): raise _malformed( 'quadratic number', decode_quadratic )
    try:
        return __.QuadraticNumber(
            decode_rational( document[ 'rat' ] ),
            decode_rational( document[ 'surd' ] ),
            document[ 'D' ] )
    except KeyError:
        raise _malformed( 'quadratic number', decode_quadratic ) from None


def encode_length( value ):
    ''' Encodes exact length as quadratic number; floats pass through. '''
    if isinstance( value, float ): return value
    return encode_quadratic( value )


def decode_length( document ):
    ''' Decodes exact or approximate length. '''
    if isinstance( document, float ): return document
    return decode_quadratic( document )


def encode_scalar( value ):
    ''' Encodes rational as pair and quadratic number as parts. '''
    if isinstance( value, __.QuadraticNumber ):
        return encode_quadratic( value )
    return encode_rational( value )


def decode_scalar( document ):
    ''' Decodes what :py:func:`encode_scalar` produces. '''
    if isinstance( document, list ): return decode_rational( document )
    return decode_quadratic( document )


#------------------------- Continued Fractions ------------------------------#


def encode_expansion( expansion ):
    ''' Encodes continued fraction as preperiod and period. '''
    return {
        'pre': list( expansion.preperiod ),
        'per': list( expansion.period ) }


def decode_expansion( document ):
    ''' Decodes continued fraction. '''
    try: preperiod, period = document[ 'pre' ], document[ 'per' ]
    except ( KeyError, TypeError ):
        raise _malformed( 'continued fraction', decode_expansion ) from None
    if not all( map( _is_integer, ( *preperiod, *period ) ) ):
        raise _malformed( 'continued fraction', decode_expansion )
    return __.ContinuedFraction( preperiod, period )


def encode_matrix( matrix ):
    ''' Encodes matrix as rows. '''
    return [ list( row ) for row in matrix.rows( ) ]


def decode_matrix( document ):
    ''' Decodes matrix; determinant +1 or -1 gives a modular matrix. '''
    try: ( a, b ), ( c, d ) = document
    except ( TypeError, ValueError ):
        raise _malformed( 'matrix', decode_matrix ) from None
    if not all( map( _is_integer, ( a, b, c, d ) ) ):
        raise _malformed( 'matrix', decode_matrix )
    if 1 == abs( a * d - b * c ): return __.ModularMatrix( a, b, c, d )
    return __.IntegerMatrix( a, b, c, d )


#------------------------------ Substitutions -------------------------------#


def encode_rule( rule ):
    ''' Encodes rule as ordered productions.

        Textual rules encode as their production text; rules over other
        letters encode as a list of ``[letter, image]`` pairs. Composed
        rules encode their factors, outermost first, and their radicand. '''
    if isinstance( rule, __.ComposedRule ):
        return {
            'factors': [ encode_rule( factor ) for factor in rule.factors ],
            'radicand': rule.radicand }
    if all( isinstance( letter, str ) for letter in rule.alphabet ):
        return __.render_rule( rule )
    return [
        [ letter, list( image ) ]
        for letter, image in zip( rule.alphabet, rule.images ) ]


def decode_rule( document ):
    ''' Decodes rule from production text, productions, or factors. '''
    if isinstance( document, str ): return __.parse_rule( document )
    if isinstance( document, dict ):
        try: factors, radicand = document[ 'factors' ], document[ 'radicand' ]
        except KeyError:
            raise _malformed( 'substitution rule', decode_rule ) from None
        if not isinstance( factors, list ):
            raise _malformed( 'substitution rule', decode_rule )
        return __.ComposedRule( map( decode_rule, factors ), radicand )
    try: return __.SubstitutionRule( {
        letter: tuple( image ) for letter, image in document } )
    except ( TypeError, ValueError ) as exc:
        if isinstance( exc, __.IncorrectData ): raise
        raise _malformed( 'substitution rule', decode_rule ) from None


def encode_word( word ):
    ''' Encodes word as symbols and base index. '''
    return { 'symbols': list( word.symbols ), 'base_index': word.base_index }


def decode_word( document ):
    ''' Decodes word. '''
    try: return __.Word( document[ 'symbols' ], document[ 'base_index' ] )
    except ( KeyError, TypeError ):
        raise _malformed( 'word', decode_word ) from None


#--------------------------------- Verdicts ---------------------------------#


def encode_verdict( verdict ):
    ''' Encodes equivalence verdict with its witness and expansions. '''
    return {
        'equivalent': verdict.equivalent,
        'witness':
            None if None is verdict.witness
            else encode_matrix( verdict.witness ),
        'route': verdict.route,
        'alpha_expansion': encode_expansion( verdict.alpha_expansion ),
        'beta_expansion': encode_expansion( verdict.beta_expansion ) }


def decode_verdict( document ):
    ''' Decodes equivalence verdict. '''
    try:
        witness = document[ 'witness' ]
        return __.EquivalenceVerdict(
            bool( document[ 'equivalent' ] ),
            None if None is witness else decode_matrix( witness ),
            decode_expansion( document[ 'alpha_expansion' ] ),
            decode_expansion( document[ 'beta_expansion' ] ),
            document[ 'route' ] )
    except ( KeyError, TypeError ):
        raise _malformed( 'verdict', decode_verdict ) from None


def encode_certificate( certificate ):
    ''' Encodes substitutive certificate. '''
    return {
        'alpha': encode_quadratic( certificate.alpha ),
        'expansion': encode_expansion( certificate.expansion ),
        'beta': encode_quadratic( certificate.beta ),
        'beta_expansion': encode_expansion( certificate.beta_expansion ),
        'witness': encode_matrix( certificate.witness ),
        'rule': encode_rule( certificate.rule ),
        'eigenvalue': encode_length( certificate.eigenvalue ),
        'pisot': certificate.pisot }


def decode_certificate( document ):
    ''' Decodes substitutive certificate. '''
    try:
        return __.SubstitutiveCertificate(
            decode_quadratic( document[ 'alpha' ] ),
            decode_expansion( document[ 'expansion' ] ),
            decode_quadratic( document[ 'beta' ] ),
            decode_expansion( document[ 'beta_expansion' ] ),
            decode_matrix( document[ 'witness' ] ),
            decode_rule( document[ 'rule' ] ),
            decode_length( document[ 'eigenvalue' ] ),
            bool( document[ 'pisot' ] ) )
    except ( KeyError, TypeError ):
        raise _malformed( 'certificate', decode_certificate ) from None


#---------------------------------- Hulls -----------------------------------#


def encode_bounds( bounds ):
    ''' Encodes distance bounds as rational pairs. '''
    return {
        'low': encode_rational( bounds.low ),
        'high': encode_rational( bounds.high ) }


def decode_bounds( document ):
    ''' Decodes distance bounds. '''
    try:
        return __.DistanceBounds(
            decode_rational( document[ 'low' ] ),
            decode_rational( document[ 'high' ] ) )
    except ( KeyError, TypeError ):
        raise _malformed( 'distance bounds', decode_bounds ) from None


def encode_module( module ):
    ''' Encodes return module with its frame coordinates. '''
    return {
        'generators': [
            encode_quadratic( generator )
            for generator in module.generators ],
        'alpha':
            None if None is module.alpha
            else encode_quadratic( module.alpha ),
        'coordinates': [
            [ encode_rational( entry ) for entry in column ]
            for column in module.coordinates ] }


def decode_module( document ):
    ''' Decodes return module. '''
    try:
        alpha = document[ 'alpha' ]
        return __.ReturnModule(
            map( decode_quadratic, document[ 'generators' ] ),
            None if None is alpha else decode_quadratic( alpha ),
            ( map( decode_rational, column )
              for column in document[ 'coordinates' ] ) )
    except ( KeyError, TypeError ):
        raise _malformed( 'return module', decode_module ) from None


def encode_torus_point( point ):
    ''' Encodes torus point with its module. '''
    return {
        'representative': encode_quadratic( point.representative ),
        'coordinates': [
            encode_scalar( coordinate )
            for coordinate in point.coordinates ],
        'origin_tag':
            None if None is point.origin_tag else point.origin_tag.value,
        'module': encode_module( point.module ) }


def decode_torus_point( document ):
    ''' Decodes torus point. '''
    try:
        tag = document[ 'origin_tag' ]
        return __.TorusPoint(
            decode_quadratic( document[ 'representative' ] ),
            map( decode_scalar, document[ 'coordinates' ] ),
            None if None is tag else __.OriginTag( tag ),
            decode_module( document[ 'module' ] ) )
    except ( KeyError, TypeError, ValueError ) as exc:
        if isinstance( exc, __.IncorrectData ): raise
        raise _malformed( 'torus point', decode_torus_point ) from None


@_our_interceptor
def encode_tiling( tiling ):
    ''' Encodes tiling as the specification which regenerates it.

        Sturmian sources in the lattice frame are ``cps`` specifications;
        the origin is always recorded. '''
    __.validate_argument_class( tiling, __.Tiling, 'tiling', encode_tiling )
    source = tiling.source
    if isinstance( source, __.SturmianSource ):
        params = source.params
        document = {
            'alpha': encode_quadratic( params.alpha ),
            'rho': encode_quadratic( params.rho ) }
        if source.lattice:
            document[ 'kind' ] = 'cps'
            document[ 'window_convention' ] = (
                _conventions[ params.branch.value ] )
        else:
            document[ 'kind' ] = 'sturmian'
            document[ 'branch' ] = params.branch.value
    elif isinstance( source, __.SubstitutionSource ):
        document = { 'kind': 'subst', 'rule': encode_rule( source.rule ) }
    else:
        document = {
            'kind': 'periodic',
            'pattern': list( source.pattern ),
            'lengths': [
                encode_quadratic( length ) for length in source.lengths ] }
    document[ 'origin' ] = encode_quadratic( tiling.origin )
    return document


@_our_interceptor
def decode_tiling( document ):
    ''' Builds tiling from specification.

        Kinds are ``sturmian`` (alpha, rho, optional branch), ``cps``
        (alpha, rho, optional window convention), ``subst`` (rule), and
        ``periodic`` (pattern and lengths). Every kind takes an optional
        origin, 0 by default. '''
    if not isinstance( document, dict ):
        raise _malformed( 'tiling specification', decode_tiling )
    kind = document.get( 'kind' )
    try:
        if 'sturmian' == kind:
            source = __.SturmianSource( __.SturmianParams(
                decode_quadratic( document[ 'alpha' ] ),
                decode_quadratic( document.get( 'rho', 0 ) ),
                document.get( 'branch', 'upper' ) ) )
        elif 'cps' == kind:
            scheme = __.CutProjectScheme(
                decode_quadratic( document[ 'alpha' ] ),
                decode_quadratic( document.get( 'rho', 0 ) ),
                document.get( 'window_convention', 'half_open_high' ) )
            source = __.SturmianSource( scheme.params, lattice = True )
        elif 'subst' == kind:
            source = __.SubstitutionSource(
                decode_rule( document[ 'rule' ] ) )
        elif 'periodic' == kind:
            source = __.PeriodicSource(
                document[ 'pattern' ],
                map( decode_quadratic, document[ 'lengths' ] ) )
        else:
            raise _malformed(
                "tiling specification of kind 'sturmian', 'cps', 'subst', "
                "or 'periodic'", decode_tiling )
    except ( KeyError, TypeError ) as exc:
        if isinstance( exc, __.IncorrectData ): raise
        raise _malformed( f"{kind} tiling specification", decode_tiling ) \
            from None
    return __.Tiling(
        source, decode_quadratic( document.get( 'origin', 0 ) ) )


#----------------------------- Anderson-Putnam ------------------------------#


def encode_graph( graph ):
    ''' Encodes graph with its edges, self-map, and expansion. '''
    return {
        'vertices': list( graph.vertices ),
        'edges': [
            { 'label': _encode_label( edge.label ),
              'tail': edge.tail, 'head': edge.head,
              'length': encode_length( edge.length ) }
            for edge in graph.edges ],
        'self_map': [
            [ _encode_label( label ) for label in image ]
            for image in graph.self_map ],
        'expansion': encode_length( graph.expansion ),
        'collared': graph.collared }


def decode_graph( document ):
    ''' Decodes graph. '''
    try:
        edges = tuple(
            __.Edge(
                _decode_label( edge[ 'label' ] ), edge[ 'tail' ],
                edge[ 'head' ], decode_length( edge[ 'length' ] ) )
            for edge in document[ 'edges' ] )
        return __.APGraph(
            document[ 'vertices' ], edges,
            ( map( _decode_label, image )
              for image in document[ 'self_map' ] ),
            decode_length( document[ 'expansion' ] ),
            bool( document[ 'collared' ] ) )
    except ( KeyError, TypeError ):
        raise _malformed( 'graph', decode_graph ) from None


#--------------------------------- Helpers ----------------------------------#


_conventions = { 'upper': 'half_open_high', 'lower': 'half_open_low' }


def _decode_label( document ):
    if isinstance( document, dict ):
        return __.CollaredTile(
            document[ 'left' ], document[ 'core' ], document[ 'right' ] )
    return document


def _encode_label( label ):
    if isinstance( label, __.CollaredTile ):
        return {
            'left': label.left, 'core': label.core, 'right': label.right }
    return label


def _is_integer( value ):
    return isinstance( value, int ) and not isinstance( value, bool )


def _malformed( kind, invocation ):
    return __.our_exception_factory_provider( 'argument_validation' )(
        'document', invocation, f"valid {kind} encoding" )
