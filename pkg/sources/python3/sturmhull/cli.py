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


''' Command-line interface.

    Every exact argument is a literal such as ``1/2 + 1/2*sqrt(5)``; floats
    are rejected. Tiling specifications are JSON documents, given inline or
    as ``@path``. Exit status is 0 on success, 1 on a domain error, and 2 on
    a parse error.

    .. code-block:: python

        >>> from io import StringIO
        >>> from sturmhull.cli import main
        >>> stream = StringIO( )
        >>> main( [ 'cf', '1/2 + 1/2*sqrt(5)' ], stream )
        0
        >>> print( stream.getvalue( ), end = '' )
        [1; (1)]
    '''


from .factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    import argparse
    from fractions import Fraction
    import sys

    import mpmath

    from . import serialization
    from .apcomplex import (
        approximant_tower,
        betti1,
        build_collared,
        build_uncollared,
    )
    from .configuration import acquire_scribe, configure_scribe
    from .confrac import cf_expand
    from .cps import CutProjectScheme, vertices_in_range
    from .equivalence import class_substitutive_witness, soe_tiling_spaces
    from .exactnum import parse_quadratic, qn_to_float
    from .exceptionality import our_exception_factory_provider
    from .exceptions import Omniexception, UnparseableText
    from .hull import (
        metric_d,
        psi,
        return_module,
        return_vectors,
        vertex_patch,
    )
    from .rendering import (
        render_cut_and_project,
        render_cutting_sequence,
        render_graph_dot,
        render_tiling_strip,
        save_drawing,
    )
    from .substitution import (
        apply,
        fixed_point_prefix,
        parse_rule,
        perron,
        substitutive_representative,
    )
    from .verification import verify
    from .words import SturmianParams, sturmian_block


def main( arguments = None, stream = None ):
    ''' Runs command line; returns exit status. '''
    if None is stream: stream = __.sys.stdout
    parser = produce_parser( )
    try: namespace = parser.parse_args( arguments )
    except SystemExit as exc:
        return exc.code if isinstance( exc.code, int ) else 0
    __.configure_scribe( namespace.record_level )
    scribe = __.acquire_scribe( __name__ )
    try: namespace.handler( namespace, stream )
    except __.UnparseableText as exc:
        print( f"{parser.prog}: {exc}", file = __.sys.stderr )
        return 2
    except _VerificationFailure:
        return 1
    except __.Omniexception as exc:
        scribe.debug( f"Command {namespace.command} failed.", exc_info = exc )
        print( f"{parser.prog}: {exc}", file = __.sys.stderr )
        return 1
    return 0


def produce_parser( ):
    ''' Produces parser with one subparser per command. '''
    parser = __.argparse.ArgumentParser(
        prog = 'sturmhull',
        description =
            'Exact sturmian, cut-and-project, and substitution tilings.' )
    parser.add_argument(
        '--record-level', default = None,
        help = 'Logging level; defaults to STURMHULL_RECORD_LEVEL.' )
    commands = parser.add_subparsers( dest = 'command', required = True )
    for name, ( producer, handler, summary ) in _commands.items( ):
        subparser = commands.add_parser( name, help = summary )
        producer( subparser )
        subparser.set_defaults( handler = handler )
    return parser


class _VerificationFailure( Exception ):
    ''' Some check of the verification suite failed. '''


#--------------------------------- Parsers ----------------------------------#


def _add_format( parser, *formats ):
    parser.add_argument(
        '--format', choices = ( 'text', 'json', *formats ), default = 'text' )


def _add_slope( parser ):
    parser.add_argument( '--alpha', required = True, help = 'Exact slope.' )
    parser.add_argument( '--rho', default = '0', help = 'Exact intercept.' )


def _produce_ap_parser( parser ):
    parser.add_argument(
        '--rule', required = True, help = "E.g. 'a>b; b>ab'." )
    parser.add_argument( '--collared', action = 'store_true' )
    parser.add_argument(
        '--depth', type = int, default = 0,
        help = 'Iterate and check the self-map to this depth.' )
    _add_format( parser, 'dot' )


def _produce_cf_parser( parser ):
    parser.add_argument( 'value', help = 'Exact rational or quadratic.' )
    _add_format( parser )


def _produce_cps_parser( parser ):
    _add_slope( parser )
    parser.add_argument( '--lo', required = True )
    parser.add_argument( '--hi', required = True )
    parser.add_argument(
        '--branch', choices = ( 'low', 'high' ), default = 'high' )
    parser.add_argument( '--svg', help = "SVG path, or '-' for output." )
    _add_format( parser )


def _produce_equiv_parser( parser ):
    parser.add_argument( 'values', nargs = '*', help = 'Two exact slopes.' )
    parser.add_argument( '--alpha' )
    parser.add_argument( '--beta' )
    parser.add_argument( '--certificate', action = 'store_true' )
    _add_format( parser )


def _produce_metric_parser( parser ):
    parser.add_argument( 'tiling', help = 'Tiling specification.' )
    parser.add_argument( 'tiling_', help = 'Tiling specification.' )
    parser.add_argument( '--tol', default = '1e-6' )
    _add_format( parser )


def _produce_render_parser( parser ):
    parser.add_argument( 'tiling', help = 'Tiling specification.' )
    parser.add_argument( '--lo', default = '-10' )
    parser.add_argument( '--hi', default = '10' )
    parser.add_argument( '--unit', type = int, default = 40 )
    parser.add_argument( '--output', default = '-' )


def _produce_return_module_parser( parser ):
    _add_slope( parser )
    parser.add_argument(
        '--branch', choices = ( 'upper', 'lower' ), default = 'upper' )
    parser.add_argument( '--tiles', type = int, default = 10_000 )
    _add_format( parser )


def _produce_sturmian_parser( parser ):
    _add_slope( parser )
    parser.add_argument(
        '--from', dest = 'start', type = int, required = True )
    parser.add_argument( '--to', dest = 'stop', type = int, required = True )
    parser.add_argument(
        '--branch', choices = ( 'upper', 'lower' ), default = 'upper' )
    parser.add_argument( '--svg', help = "SVG path, or '-' for output." )
    _add_format( parser )


def _produce_subst_parser( parser ):
    source = parser.add_mutually_exclusive_group( required = True )
    source.add_argument( '--rule' )
    source.add_argument( '--from-slope', dest = 'slope' )
    parser.add_argument( '--seed' )
    parser.add_argument( '--iters', type = int, default = 1 )
    parser.add_argument(
        '--prefix', type = int,
        help = 'Length of the fixed point prefix from the seed.' )
    _add_format( parser )


def _produce_verify_parser( parser ):
    parser.add_argument( '--seed', type = int, default = 0 )
    parser.add_argument(
        '--only', type = int, nargs = '+', help = 'Check numbers.' )
    parser.add_argument( '--timings', action = 'store_true' )


#--------------------------------- Handlers ---------------------------------#


def _run_ap( namespace, stream ):
    rule = __.parse_rule( namespace.rule )
    build = __.build_collared if namespace.collared else __.build_uncollared
    graph = build( rule )
    if namespace.depth: __.approximant_tower( graph, namespace.depth )
    if 'dot' == namespace.format:
        stream.write( __.render_graph_dot( graph ) )
        return
    if 'json' == namespace.format:
        document = __.serialization.encode_graph( graph )
        document[ 'betti1' ] = __.betti1( graph )
        _emit_json( document, stream )
        return
    print(
        f"vertices {len( graph.vertices )}, edges {len( graph.edges )}, "
        f"betti1 {__.betti1( graph )}", file = stream )
    for edge, image in zip( graph.edges, graph.self_map ):
        print(
            f"{edge.label}: {edge.tail} -> {edge.head} "
            f"maps to {' '.join( map( str, image ) )}", file = stream )


def _run_cf( namespace, stream ):
    expansion = __.cf_expand( _exact( namespace.value ) )
    if 'json' == namespace.format:
        _emit_json( __.serialization.encode_expansion( expansion ), stream )
    else: print( expansion, file = stream )


def _run_cps( namespace, stream ):
    scheme = __.CutProjectScheme(
        _exact( namespace.alpha ), _exact( namespace.rho ),
        f"half_open_{namespace.branch}" )
    low, high = _exact( namespace.lo ), _exact( namespace.hi )
    vertices = __.vertices_in_range( scheme, low, high )
    if None is not namespace.svg:
        _emit_drawing(
            __.render_cut_and_project( scheme, low, high ),
            namespace.svg, stream )
        return
    if 'json' == namespace.format:
        _emit_json( {
            'alpha': __.serialization.encode_quadratic( scheme.alpha ),
            'rho': __.serialization.encode_quadratic( scheme.rho ),
            'window_convention': scheme.window_convention.value,
            'vertices': [ list( point ) for point in vertices ],
            'positions': [
                __.serialization.encode_quadratic( position )
                for position in vertices.positions ] }, stream )
        return
    for ( i, j ), position in zip( vertices, vertices.positions ):
        print( f"{i} {j} {_float_text( position )}", file = stream )


def _run_equiv( namespace, stream ):
    values = list( namespace.values )
    if len( values ) > 2:
        raise _parse_failure( ' '.join( values ), 'at most two slopes' )
    alpha = namespace.alpha or ( values.pop( 0 ) if values else None )
    beta = namespace.beta or ( values.pop( 0 ) if values else None )
    if None is alpha or None is beta:
        raise _parse_failure( ' '.join( namespace.values ), 'two slopes' )
    alpha, beta = _exact( alpha ), _exact( beta )
    verdict = __.soe_tiling_spaces( alpha, beta )
    certificates = (
        tuple( map( __.class_substitutive_witness, ( alpha, beta ) ) )
        if namespace.certificate else ( ) )
    if 'json' == namespace.format:
        document = __.serialization.encode_verdict( verdict )
        if certificates:
            document[ 'certificates' ] = [
                __.serialization.encode_certificate( certificate )
                for certificate in certificates ]
        _emit_json( document, stream )
        return
    print(
        'equivalent' if verdict.equivalent else 'not equivalent',
        file = stream )
    print(
        f"expansions {verdict.alpha_expansion} {verdict.beta_expansion}",
        file = stream )
    if verdict.equivalent: print( f"witness {verdict.witness}", file = stream )
    for certificate in certificates:
        print(
            f"slope {certificate.alpha}: beta {certificate.beta} "
            f"{certificate.beta_expansion}, rule {certificate.rule}, "
            f"expansion factor {certificate.eigenvalue}, "
            f"pisot {str( certificate.pisot ).lower( )}", file = stream )


def _run_metric( namespace, stream ):
    tiling = _tiling( namespace.tiling )
    tiling_ = _tiling( namespace.tiling_ )
    try: tolerance = __.Fraction( namespace.tol )
    except ValueError:
        raise _parse_failure( namespace.tol, 'decimal or fraction' ) \
            from None
    bounds = __.metric_d( tiling, tiling_, tolerance )
    if 'json' == namespace.format:
        _emit_json( __.serialization.encode_bounds( bounds ), stream )
    else:
        print(
            f"[{bounds.low}, {bounds.high}] "
            f"~ [{float( bounds.low ):.9g}, {float( bounds.high ):.9g}]",
            file = stream )


def _run_render( namespace, stream ):
    drawing = __.render_tiling_strip(
        _tiling( namespace.tiling ), _exact( namespace.lo ),
        _exact( namespace.hi ), unit = namespace.unit )
    _emit_drawing( drawing, namespace.output, stream )


def _run_return_module( namespace, stream ):
    params = __.SturmianParams(
        _exact( namespace.alpha ), _exact( namespace.rho ),
        namespace.branch )
    tiling = __.psi( params )
    half = max( 1, namespace.tiles // 2 )
    vectors = __.return_vectors(
        tiling, __.vertex_patch( tiling ), tiling.source.vertex( half ) )
    module = __.return_module( vectors, params.alpha )
    if 'json' == namespace.format:
        _emit_json( __.serialization.encode_module( module ), stream )
        return
    print(
        f"{len( vectors )} return vectors span "
        f"<{', '.join( map( str, module.generators ) )}>", file = stream )


def _run_sturmian( namespace, stream ):
    params = __.SturmianParams(
        _exact( namespace.alpha ), _exact( namespace.rho ),
        namespace.branch )
    word = __.sturmian_block( params, namespace.start, namespace.stop )
    if None is not namespace.svg:
        _emit_drawing(
            __.render_cutting_sequence(
                params, namespace.start, namespace.stop ),
            namespace.svg, stream )
        return
    if 'json' == namespace.format:
        _emit_json( {
            'alpha': __.serialization.encode_quadratic( params.alpha ),
            'rho': __.serialization.encode_quadratic( params.rho ),
            'branch': params.branch.value,
            'from': namespace.start, 'to': namespace.stop,
            'word': str( word ) }, stream )
    elif len( word ): print( word, file = stream )


def _run_subst( namespace, stream ):
    if None is not namespace.slope:
        beta, rule = __.substitutive_representative(
            _exact( namespace.slope ) )
        document = {
            'beta': __.serialization.encode_quadratic( beta ),
            'rule': __.serialization.encode_rule( rule ) }
        text = f"beta {beta}\nrule {rule}"
    else:
        rule = __.parse_rule( namespace.rule )
        document = { 'rule': __.serialization.encode_rule( rule ) }
        text = f"rule {rule}"
    data = __.perron( rule )
    document[ 'eigenvalue' ] = __.serialization.encode_length(
        data.eigenvalue )
    document[ 'lengths' ] = [
        __.serialization.encode_length( length )
        for length in data.left_eigenvector ]
    text = (
        f"{text}\nexpansion factor {data.eigenvalue}\nlengths "
        f"{', '.join( map( str, data.left_eigenvector ) )}" )
    if None is not namespace.seed:
        seed = _letter( rule, namespace.seed )
        if None is namespace.prefix:
            word = __.apply( rule, ( seed, ), namespace.iters )
        else: word = __.fixed_point_prefix( rule, seed, namespace.prefix )
        document[ 'word' ] = __.serialization.encode_word( word )
        text = f"{text}\n{''.join( map( str, word ) )}"
    if 'json' == namespace.format: _emit_json( document, stream )
    else: print( text, file = stream )


def _run_verify( namespace, stream ):
    report = __.verify( namespace.seed, namespace.only )
    print( report.render_table( namespace.timings ), file = stream )
    if not report.passed: raise _VerificationFailure


_commands = {
    'sturmian': (
        _produce_sturmian_parser, _run_sturmian,
        'Symbols of a sturmian word.' ),
    'cps': (
        _produce_cps_parser, _run_cps,
        'Vertices of the canonical cut-and-project scheme.' ),
    'subst': (
        _produce_subst_parser, _run_subst,
        'Perron data and iterates of a substitution.' ),
    'cf': (
        _produce_cf_parser, _run_cf, 'Continued fraction expansion.' ),
    'equiv': (
        _produce_equiv_parser, _run_equiv,
        'Strong orbit equivalence of sturmian tiling spaces.' ),
    'metric': (
        _produce_metric_parser, _run_metric,
        'Bounds on the distance between two tilings.' ),
    'return-module': (
        _produce_return_module_parser, _run_return_module,
        'Return module of a sturmian tiling.' ),
    'ap': (
        _produce_ap_parser, _run_ap, 'Anderson-Putnam graph of a rule.' ),
    'render': (
        _produce_render_parser, _run_render, 'SVG strip of a tiling.' ),
    'verify': (
        _produce_verify_parser, _run_verify,
        'Run the seeded verification checks.' ),
}


#--------------------------------- Helpers ----------------------------------#


def _emit_drawing( drawing, path, stream ):
    if '-' == path: stream.write( drawing.as_svg( ) )
    else: __.save_drawing( drawing, path )


def _emit_json( document, stream ):
    print( __.serialization.dumps( document ), file = stream )


def _exact( text ):
    return __.parse_quadratic( text )


def _float_text( value ):
    return __.mpmath.nstr( __.qn_to_float( value ), 15 )


def _letter( rule, text ):
    for letter in rule.alphabet:
        if str( letter ) == text: return letter
    raise _parse_failure( text, 'letter of the rule alphabet' )


def _parse_failure( text, expectation ):
    return __.our_exception_factory_provider( 'parse_failure' )(
        text, 0, expectation )


def _tiling( text ):
    if text.startswith( '@' ):
        try:
            with open( text[ 1 : ], encoding = 'utf-8' ) as file:
                text = file.read( )
        except OSError:
            raise _parse_failure( text, 'readable specification file' ) \
                from None
    return __.serialization.decode_tiling( __.serialization.loads( text ) )
