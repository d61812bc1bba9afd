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


''' Validation functions.

    Each validator returns its argument when valid, so that validation can be
    composed with assignment. '''


# Latent Dependencies:
#   validators -> exceptionality -> validators
# pylint: disable=cyclic-import


def validate_argument_class( argument, classes, name, invocation ):
    ''' Validates argument as an instance of one or more classes. '''
    if isinstance( argument, classes ) and not isinstance( argument, bool ):
        return argument
    from .nomenclature import calculate_class_label
    raise _provide_exception_factory( 'argument_validation' )(
        name, invocation, calculate_class_label( classes ) )


def validate_argument_nonnegativity( argument, name, invocation ):
    ''' Validates argument as a nonnegative integer. '''
    validate_argument_class( argument, int, name, invocation )
    if 0 <= argument: return argument
    raise _provide_exception_factory( 'argument_validation' )(
        name, invocation, 'nonnegative integer' )


def validate_argument_positivity( argument, name, invocation ):
    ''' Validates argument as a positive integer. '''
    validate_argument_class( argument, int, name, invocation )
    if 0 < argument: return argument
    raise _provide_exception_factory( 'argument_validation' )(
        name, invocation, 'positive integer' )


def validate_argument_quadratic( argument, name, invocation ):
    ''' Validates argument as an exact number; returns it as quadratic.

        Integers and fractions are admitted and embedded as rationals. '''
    from fractions import Fraction
    from .exactnum import QuadraticNumber
    if isinstance( argument, QuadraticNumber ): return argument
    if isinstance( argument, ( int, Fraction ) ) and not isinstance(
        argument, bool
    ): return QuadraticNumber( argument )
    raise _provide_exception_factory( 'argument_validation' )(
        name, invocation, 'quadratic number, integer, or exact rational' )


def validate_argument_irrationality( argument, name, invocation ):
    ''' Validates argument as a quadratic irrational. '''
    argument = validate_argument_quadratic( argument, name, invocation )
    if not argument.is_rational( ): return argument
    raise _provide_exception_factory( 'rational_input' )( name, invocation )


def validate_argument_unit_interval(
    argument, name, invocation, closed_low = False
):
    ''' Validates argument as lying in the open or half-open unit interval.

        With ``closed_low``, zero is admitted. '''
    argument = validate_argument_quadratic( argument, name, invocation )
    low = argument.sign( )
    above = 0 < low or ( closed_low and 0 == low )
    if above and 0 > ( argument - 1 ).sign( ): return argument
    interval = '[0, 1)' if closed_low else '(0, 1)'
    raise _provide_exception_factory( 'argument_validation' )(
        name, invocation, f"exact value in {interval}" )


def validate_attribute_name( name ):
    ''' Validates attribute name as Python identifier. '''
    from .nomenclature import is_python_identifier
    if is_python_identifier( name ): return name
    raise _provide_exception_factory( 'attribute_name_illegality' )( name )


def validate_attribute_existence( name, object_ ):
    ''' Validates attribute existence on object. '''
    if hasattr( object_, name ): return name
    raise _provide_exception_factory( 'attribute_nonexistence' )(
        name, object_ )


def _provide_exception_factory( name ):
    ''' Provides package-internal exception factory. '''
    from .exceptionality import our_exception_factory_provider
    return our_exception_factory_provider( name )
