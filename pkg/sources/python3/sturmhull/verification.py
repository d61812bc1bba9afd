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


''' Seeded checks of the exact claims the package computes.

    Each check draws its parameters from a generator seeded by the caller,
    so a report is reproducible. Timings are recorded but are only rendered
    on request, so that reports of equal seeds are identical text.

    .. code-block:: python

        >>> from sturmhull.verification import verify
        >>> report = verify( seed = 7, selection = ( 3, 9 ) )
        >>> report.passed
        True
        >>> [ outcome.title for outcome in report.outcomes ]
        ['length convergence', 'anderson-putnam betti numbers']
    '''


from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from fractions import Fraction
    from random import Random
    from time import perf_counter

    from .apcomplex import betti1, build_collared, build_uncollared
    from .configuration import acquire_scribe
    from .confrac import (
        cf_equivalent,
        is_purely_periodic,
        mobius_apply,
        modular_generators,
    )
    from .cps import CutProjectScheme, accept
    from .equivalence import class_substitutive_witness, soe_tiling_spaces
    from .exactnum import QuadraticNumber, parse_quadratic, qn_to_float
    from .exceptionality import our_exception_factory_provider
    from .exceptions import Omniexception
    from .hull import (
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
    from .substitution import (
        FIBONACCI,
        language_sample,
        lengths_of_iterates,
        parse_rule,
        validate_language_invariance,
    )
    from .validators import validate_argument_class
    from .words import (
        SturmianParams,
        complexity,
        cutting_sequence,
        shift_params,
        sturmian_block,
    )


class CheckOutcome( _ValueObject ):
    ''' Result of one check, with a deterministic summary. '''

    __slots__ = ( 'number', 'title', 'passed', 'detail', 'seconds' )

    def __init__( self, number, title, passed, detail, seconds ):
        self._establish(
            number = number, title = title, passed = passed,
            detail = detail, seconds = seconds )


class VerificationReport( _ValueObject ):
    ''' Outcomes of the selected checks, in order. '''

    __slots__ = ( 'seed', 'outcomes' )

    def __init__( self, seed, outcomes ):
        self._establish( seed = seed, outcomes = tuple( outcomes ) )

    @property
    def passed( self ):
        ''' Did every check pass? '''
        return all( outcome.passed for outcome in self.outcomes )

    def render_table( self, timings = False ):
        ''' Renders outcomes as a text table. '''
        width = max(
            ( len( outcome.title ) for outcome in self.outcomes ),
            default = 5 )
        lines = [ f"seed {self.seed}" ]
        for outcome in self.outcomes:
            verdict = 'PASS' if outcome.passed else 'FAIL'
            line = (
                f"{outcome.number:>3}  {verdict}  "
                f"{outcome.title:<{width}}  {outcome.detail}" )
            if timings: line = f"{line}  ({outcome.seconds:.2f} s)"
            lines.append( line )
        total = sum( outcome.passed for outcome in self.outcomes )
        lines.append( f"{total} of {len( self.outcomes )} checks passed" )
        return '\n'.join( lines )


@_our_interceptor
def verify( seed = 0, selection = None ):
    ''' Runs checks by number, all of them by default. '''
    __.validate_argument_class( seed, int, 'seed', verify )
    numbers = tuple( _checks ) if None is selection else tuple( selection )
    for number in numbers:
        if number in _checks: continue
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'selection', verify,
            f"check numbers from 1 through {len( _checks )}" )
    scribe = __.acquire_scribe( __name__ )
    outcomes = [ ]
    for number in numbers:
        title, check = _checks[ number ]
        generator = __.Random( seed * 100 + number )
        began = __.perf_counter( )
        try: passed, detail = check( generator )
        except __.Omniexception as exc:
            passed, detail = False, f"{type( exc ).__name__}: {exc}"
        seconds = __.perf_counter( ) - began
        scribe.info(
            f"Check {number} ({title}): "
            f"{'passed' if passed else 'failed'} in {seconds:.2f} s." )
        outcomes.append(
            CheckOutcome( number, title, passed, detail, seconds ) )
    return VerificationReport( seed, outcomes )


#------------------------------- Parameters ---------------------------------#


def draw_slope( generator, simple = False ):
    ''' Random quadratic irrational in ``(0, 1)``.

        Simple slopes are fractional parts of ``a + b*sqrt(D)`` with b of 1
        or 2, which keep continued fraction periods short. '''
    radicand = generator.choice( _radicands )
    if simple:
        value = __.QuadraticNumber(
            generator.randint( -3, 3 ), generator.choice( ( 1, 2 ) ),
            radicand )
    else:
        value = __.QuadraticNumber(
            __.Fraction(
                generator.randint( -9, 9 ), generator.randint( 1, 5 ) ),
            __.Fraction(
                generator.choice( ( -3, -2, -1, 1, 2, 3 ) ),
                generator.randint( 1, 4 ) ),
            radicand )
    return value - value.floor( )


def draw_intercept( generator, alpha ):
    ''' Random intercept in ``[0, 1)``: rational, or in the slope's field.
    '''
    if generator.random( ) < 0.5:
        denominator = generator.randint( 1, 7 )
        return __.QuadraticNumber( __.Fraction(
            generator.randint( 0, denominator - 1 ), denominator ) )
    value = alpha * generator.randint( -5, 5 ) + generator.randint( -5, 5 )
    return value - value.floor( )


def draw_params( generator ):
    ''' Random sturmian parameters, either branch. '''
    alpha = draw_slope( generator )
    return __.SturmianParams(
        alpha, draw_intercept( generator, alpha ),
        generator.choice( ( 'upper', 'lower' ) ) )


def draw_modular_matrix( generator, depth = 12 ):
    ''' Product of at most depth elementary generators of GL(2,Z). '''
    generators = __.modular_generators( )
    matrix = generators[ 0 ].identity( )
    for _ in range( generator.randint( 0, depth ) ):
        matrix = matrix @ generator.choice( generators )
    return matrix


def draw_translation( generator, alpha, scale = 50 ):
    ''' Random exact displacement ``p + q*alpha`` with rational p and q. '''
    return (
        __.Fraction(
            generator.randint( -scale, scale ), generator.randint( 1, 9 ) )
        + alpha * __.Fraction(
            generator.randint( -scale, scale ), generator.randint( 1, 9 ) ) )


#--------------------------------- Checks -----------------------------------#


def _check_complexity( generator ):
    for _ in range( 20 ):
        params = draw_params( generator )
        for n in range( 1, 61 ):
            count = __.complexity( params, n )
            if n + 1 == count: continue
            return False, (
                f"slope {params.alpha}: {count} factors of length {n}" )
    return True, "complexity n+1 for n <= 60 on 20 words"


def _check_generator_agreement( generator ):
    size = 10_000
    for _ in range( 10 ):
        params = draw_params( generator )
        block = __.sturmian_block( params, 0, size ).symbols
        cutting = __.cutting_sequence(
            params.alpha, params.rho, 0, size, params.branch ).symbols
        scheme = __.CutProjectScheme(
            params.alpha, params.rho, _conventions[ params.branch.value ] )
        if block == cutting == _read_accepted_lines( scheme, size ):
            continue
        return False, f"generators disagree for slope {params.alpha}"
    return True, f"three generators agree on {size} symbols, 10 words"


def _read_accepted_lines( scheme, size ):
    ''' Symbols from the point accepted on each line ``i + j = k``.

        Candidates are tested with the window alone; consecutive lines
        accept points whose second coordinates differ by 0 or 1. '''
    columns = [ ]
    for k in range( size + 1 ):
        candidates = (
            range( -2, 3 ) if not columns
            else ( columns[ -1 ], columns[ -1 ] + 1 ) )
        accepted = [
            j for j in candidates if __.accept( scheme, ( k - j, j ) ) ]
        if 1 != len( accepted ): return None
        columns.append( accepted[ 0 ] )
    return tuple(
        column_ - column
        for column, column_ in zip( columns, columns[ 1 : ] ) )


def _check_length_convergence( generator ):
    # pylint: disable=unused-argument
    golden = __.parse_quadratic( '(1 + sqrt(5))/2' )
    common = ( 2 + golden ) / ( 1 + golden )
    depth = 25
    natural = __.lengths_of_iterates(
        __.FIBONACCI, ( __.QuadraticNumber( 1 ), golden ), depth )
    suspended = __.lengths_of_iterates(
        __.FIBONACCI, ( common, common ), depth )
    inverse_golden = 1 / __.qn_to_float( golden )
    for letter in range( 2 ):
        differences = [
            abs( level[ letter ] - level_[ letter ] )
            for level, level_ in zip( natural, suspended ) ]
        if 1e-4 <= __.qn_to_float( differences[ -1 ] ):
            return False, f"difference {differences[ -1 ]} at depth {depth}"
        for n in range( 10, depth ):
            ratio = __.qn_to_float( differences[ n + 1 ] / differences[ n ] )
            if abs( ratio - inverse_golden ) <= 0.05 * inverse_golden:
                continue
            return False, f"ratio {ratio} at depth {n}"
    return True, f"differences shrink by 1/phi through depth {depth}"


def _check_equivalence( generator ):
    for _ in range( 100 ):
        alpha = draw_slope( generator )
        beta = __.mobius_apply( draw_modular_matrix( generator ), alpha )
        beta = beta - beta.floor( )
        verdict = __.soe_tiling_spaces( alpha, beta )
        if (    verdict.equivalent
            and beta == __.mobius_apply( verdict.witness, alpha )
        ): continue
        return False, f"{alpha} and {beta} not certified equivalent"
    for text, text_ in _inequivalent_panel:
        alpha, beta = __.parse_quadratic( text ), __.parse_quadratic( text_ )
        if __.soe_tiling_spaces( alpha, beta ).equivalent:
            return False, f"{text} and {text_} declared equivalent"
    return True, "100 related pairs certified, panel separated"


def _check_return_module( generator ):
    for _ in range( 5 ):
        alpha = draw_slope( generator, simple = True )
        tiling = __.psi( __.SturmianParams(
            alpha, draw_intercept( generator, alpha ) ) )
        radius = tiling.source.vertex( 5000 )
        # Vertices 0 and 7 with patches of one and two tiles.
        for index, size in ( ( 0, 1 ), ( 7, 2 ) ):
            vectors = __.return_vectors(
                tiling, __.vertex_patch( tiling, index, size ), radius )
            module = __.return_module( vectors, alpha )
            if { __.QuadraticNumber( 1 ), alpha } == set( module.generators ):
                continue
            return False, (
                "basis {} for slope {} at vertex {}".format(
                    ', '.join( map( str, module.generators ) ),
                    alpha, index ) )
    return True, "basis {1, alpha} recovered at 2 vertices of 5 tilings"


def _check_covering_projection( generator ):
    params = draw_params( generator )
    alpha = params.alpha
    module = __.return_module( ( 1, alpha ), alpha )
    tiling = __.translate(
        __.psi( params ), draw_translation( generator, alpha ) )
    point = __.torus_project( tiling, module )
    for _ in range( 100 ):
        vector = (
            generator.randint( -50, 50 )
            + alpha * generator.randint( -50, 50 ) )
        if point != __.torus_project( __.translate( tiling, vector ), module ):
            return False, f"projection moved by module vector {vector}"
    for _ in range( 100 ):
        displacement = draw_translation( generator, alpha )
        moved = __.torus_project(
            __.translate( tiling, displacement ), module )
        expected = point.translate( displacement )
        if expected.coordinates != moved.coordinates:
            return False, f"projection not equivariant under {displacement}"
    return True, "100 module invariances, 100 equivariances"


def _check_shift_dictionary( generator ):
    params = draw_params( generator )
    tiling = __.psi( params )
    shifted, travel = params, __.QuadraticNumber( 0 )
    for k in range( 1, 51 ):
        travel = travel + __.delta_alpha( shifted )
        shifted = __.shift_params( shifted )
        if (    __.window( __.psi( shifted ), -5, 5 )
            == __.window( __.translate( tiling, travel ), -5, 5 )
        ): continue
        return False, f"shift {k} is not the translate by {travel}"
    for _ in range( 100 ):
        origin = __.translate(
            tiling, draw_translation( generator, params.alpha ) )
        x = draw_translation( generator, params.alpha, 10 )
        y = draw_translation( generator, params.alpha, 10 )
        m_x = __.translation_cocycle( origin, x )
        moved = __.translate( origin, x )
        if (    __.translation_cocycle( origin, x + y )
            != m_x + __.translation_cocycle( moved, y )
        ): return False, f"cocycle identity fails for {x} and {y}"
        if (    __.phi( moved ).block( 0, 20 ).symbols
            != __.phi( origin ).block( m_x, m_x + 20 ).symbols
        ): return False, f"label sequence not shifted by cocycle at {x}"
    return True, "50 shifts, 100 cocycle identities"


def _check_substitutive_representative( generator ):
    for _ in range( 10 ):
        alpha = draw_slope( generator )
        certificate = __.class_substitutive_witness( alpha )
        word = __.language_sample( certificate.beta, 16 )
        if (    __.cf_equivalent( alpha, certificate.beta )[ 0 ]
            and __.is_purely_periodic( certificate.beta_expansion )
            and certificate.pisot
            and __.validate_language_invariance( certificate.rule, word, 15 )
        ): continue
        return False, f"certificate for {alpha} fails"
    return True, "10 certificates validated"


def _check_betti_numbers( generator ):
    ''' Consistency of graph ranks with the free group on two generators. '''
    # pylint: disable=unused-argument
    numbers = (
        __.betti1( __.build_uncollared( __.FIBONACCI ) ),
        __.betti1( __.build_collared( __.FIBONACCI ) ),
        __.betti1( __.build_uncollared( __.parse_rule( 'a>aa' ) ) ) )
    detail = "Fibonacci {}, collared {}, periodic {}".format( *numbers )
    return ( 2, 2, 1 ) == numbers, detail


def _check_metric( generator ):
    alpha = __.parse_quadratic( '(3 - sqrt(5))/2' )
    tiling = __.psi( __.SturmianParams( alpha, 0 ) )
    bounds = __.metric_d( tiling, tiling, __.Fraction( 1, 10 ** 6 ) )
    if 0 not in bounds or bounds.width( ) > __.Fraction( 1, 10 ** 6 ):
        return False, f"self distance in [{bounds.low}, {bounds.high}]"
    for _ in range( 20 ):
        x = __.Fraction(
            generator.choice( ( -1, 1 ) ) * generator.randint( 1, 40 ),
            generator.randint( 41, 400 ) )
        bounds = __.metric_d(
            tiling, __.translate( tiling, x ), __.Fraction( 1, 1000 ) )
        if bounds.high > abs( x ):
            return False, f"distance to translate by {x} above {abs( x )}"
    upper = __.psi( __.SturmianParams( alpha, 0, 'upper' ) )
    lower = __.psi( __.SturmianParams( alpha, 0, 'lower' ) )
    bounds = __.metric_d( upper, lower, __.Fraction( 1, 16 ) )
    if 0 >= bounds.low:
        return False, "singular branches not separated"
    return True, f"branches at distance at least {bounds.low}"


#--------------------------------- Tables -----------------------------------#


_checks = {
    1: ( 'sturmian complexity', _check_complexity ),
    2: ( 'generator agreement', _check_generator_agreement ),
    3: ( 'length convergence', _check_length_convergence ),
    4: ( 'equivalence soundness', _check_equivalence ),
    5: ( 'return module recovery', _check_return_module ),
    6: ( 'covering projection', _check_covering_projection ),
    7: ( 'shift dictionary', _check_shift_dictionary ),
    8: (
        'substitutive representative',
        _check_substitutive_representative ),
    9: ( 'anderson-putnam betti numbers', _check_betti_numbers ),
    10: ( 'metric sanity', _check_metric ),
}

_conventions = { 'upper': 'half_open_high', 'lower': 'half_open_low' }

_inequivalent_panel = (
    ( '(sqrt(5) - 1)/2', 'sqrt(2) - 1' ),
    ( 'sqrt(2) - 1', 'sqrt(3) - 1' ),
)

_radicands = ( 2, 3, 5, 6, 7, 10, 11, 13 )
