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


''' Factories to produce exceptions with standard message formats.

    Each factory takes, as its first argument, an exception class provider.
    This provider takes the name of an exception class from
    :py:mod:`sturmhull.exceptions` and provides that class. Use
    :py:func:`provide_exception_factory` (or its alias
    :py:data:`our_exception_factory_provider`) to retrieve a factory with the
    provider already applied:

    .. code-block:: python

        >>> from sturmhull.exceptionality import our_exception_factory_provider
        >>> exception = our_exception_factory_provider( 'radicand_mismatch' )(
        ...     2, 5, 'addition' )
        >>> str( exception )
        'Incompatible radicands 2 and 5 for addition: values must share one quadratic field.'
        >>> dict( exception.exception_labels )
        {'failure class': 'radicand_mismatch'}
    ''' # pylint: disable=line-too-long


# Latent Dependencies:
#   exceptionality -> validators -> exceptionality
#   exceptionality -> nomenclature -> exceptionality
# pylint: disable=cyclic-import


def provide_exception_class( name ):
    ''' Provides package-internal exception class.

        The exception classes are drawn from the
        :py:mod:`sturmhull.exceptions` module. '''
    from . import exceptions
    from .nomenclature import is_public_name
    if is_public_name( name ) and hasattr( exceptions, name ):
        exception_class = getattr( exceptions, name )
        if isinstance( exception_class, type ) and issubclass(
            exception_class, exceptions.Omniexception
        ): return exception_class
    raise provide_exception_factory( 'inaccessible_entity' )(
        name, 'name of available exception class' )


def provide_exception_factory( name ):
    ''' Provides package-internal exception factory.

        The exception factories are drawn from this module and are functions
        which have names that start with ``create_`` and end with
        ``_exception``. '''
    complete_name = f"create_{name}_exception"
    if complete_name in globals( ):
        # nosemgrep: python.lang.security.dangerous-globals-use
        exception_factory = globals( )[ complete_name ]
        from functools import partial as partial_function
        return partial_function( exception_factory, provide_exception_class )
    raise provide_exception_factory( 'inaccessible_entity' )(
        complete_name, 'name of available exception factory' )

#: Provides exception factories used within this package.
our_exception_factory_provider = provide_exception_factory


#---------------------------- Generic Factories -----------------------------#


def create_argument_validation_exception(
    exception_class_provider, name, invocation, expectation
):
    ''' Creates error with context about invalid argument.

        Given an argument name, callable object, and an expectation about the
        argument (as text), produces an exception of a class equivalent to
        :py:exc:`sturmhull.exceptions.IncorrectData`. '''
    from .nomenclature import (
        calculate_argument_label,
        calculate_invocable_label,
    )
    argument_label = calculate_argument_label( name, invocation )
    invocation_label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_argument_validation_exception,
        'IncorrectData',
        f"Invalid {argument_label} to {invocation_label}: "
        f"must be {expectation}" )


def create_attribute_immutability_exception(
    exception_class_provider, name, object_, action = 'assign'
):
    ''' Creates error with context about immutable attribute. '''
    from .nomenclature import calculate_label
    label = calculate_label( object_, f"attribute '{name}'" )
    return _produce_exception(
        exception_class_provider, create_attribute_immutability_exception,
        'ImpermissibleAttributeOperation',
        f"Attempt to {action} immutable {label}." )


def create_attribute_indelibility_exception(
    exception_class_provider, name, object_
):
    ''' Creates error with context about indelible attribute. '''
    from .nomenclature import calculate_label
    label = calculate_label( object_, f"attribute '{name}'" )
    return _produce_exception(
        exception_class_provider, create_attribute_indelibility_exception,
        'ImpermissibleAttributeOperation',
        f"Attempt to delete indelible {label}." )


def create_attribute_name_illegality_exception(
    exception_class_provider, name
):
    ''' Creates error about illegal attribute name. '''
    return _produce_exception(
        exception_class_provider, create_attribute_name_illegality_exception,
        'IncorrectData',
        f"Attempt to access attribute with illegal name '{name}'." )


def create_attribute_nonexistence_exception(
    exception_class_provider, name, object_
):
    ''' Creates error with context about nonexistent attribute. '''
    from .nomenclature import calculate_label
    label = calculate_label( object_, f"attribute '{name}'" )
    return _produce_exception(
        exception_class_provider, create_attribute_nonexistence_exception,
        'InvalidOperation',
        f"Attempt to access nonexistent {label}." )


def create_class_attribute_rejection_exception(
    exception_class_provider, name, class_
):
    ''' Creates error about rejected attribute in class definition. '''
    from .nomenclature import calculate_class_label
    label = calculate_class_label( class_, f"attribute '{name}'" )
    return _produce_exception(
        exception_class_provider, create_class_attribute_rejection_exception,
        'ImpermissibleOperation',
        f"Rejection of extant definition of {label}." )


def create_fugitive_apprehension_exception(
    exception_class_provider, fugitive, invocation
):
    ''' Creates error with context about fugitive exception apprehension.

        Given an apprehended fugitive exception and the callable on whose
        boundary it was apprehended, produces an exception of a class
        equivalent to :py:exc:`sturmhull.exceptions.InvalidState`. '''
    from .nomenclature import (
        calculate_class_label,
        calculate_invocable_label,
    )
    exception_class_label = calculate_class_label( type( fugitive ) )
    invocation_label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_fugitive_apprehension_exception,
        'InvalidState',
        f"Apprehension of fugitive exception of {exception_class_label} "
        f"at boundary of {invocation_label}: {fugitive}" )


def create_impermissible_instantiation_exception(
    exception_class_provider, class_
):
    ''' Creates error with context about impermissible instantiation. '''
    from .nomenclature import calculate_class_label
    label = calculate_class_label( class_ )
    return _produce_exception(
        exception_class_provider, create_impermissible_instantiation_exception,
        'ImpermissibleOperation',
        f"Impermissible instantiation of {label}." )


def create_inaccessible_entity_exception(
    exception_class_provider, name, expectation
):
    ''' Creates error with context about inaccessible entity. '''
    return _produce_exception(
        exception_class_provider, create_inaccessible_entity_exception,
        'InvalidOperation',
        f"Impermissible attempt to access entity '{name}': "
        f"must access {expectation}" )


def create_invalid_state_exception(
    exception_class_provider, message, package_name
):
    ''' Creates error with context about invalid state.

        Given a message and a complete package name, produces an exception of
        a class equivalent to :py:exc:`sturmhull.exceptions.InvalidState`. '''
    from .nomenclature import calculate_apex_package_name
    apex_package_name = calculate_apex_package_name( package_name )
    return _produce_exception(
        exception_class_provider, create_invalid_state_exception,
        'InvalidState',
        f"Invalid internal state! {message} "
        f"Please report to the '{apex_package_name}' package maintainers." )


def create_invocation_validation_exception(
    exception_class_provider, invocation, cause
):
    ''' Creates error with context about invalid invocation. '''
    from .nomenclature import calculate_invocable_label
    label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_invocation_validation_exception,
        'IncorrectData',
        f"Incompatible arguments for invocation of {label}: {cause}" )


#----------------------------- Domain Factories -----------------------------#


def create_absent_fixed_prefix_exception(
    exception_class_provider, seed, invocation
):
    ''' Creates error about a seed letter without a fixed prefix.

        Raised when no power of a substitution, up to the alphabet size,
        maps the seed to a word which begins with the seed. '''
    from .nomenclature import calculate_invocable_label
    label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_absent_fixed_prefix_exception,
        'IncorrectData',
        f"No power of the substitution maps letter {seed!r} to a word "
        f"beginning with {seed!r}, as required by {label}." )


def create_absent_patch_exception(
    exception_class_provider, invocation
):
    ''' Creates error about a patch which does not occur where claimed. '''
    from .nomenclature import calculate_invocable_label
    label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_absent_patch_exception,
        'IncorrectData',
        f"Patch does not occur in the tiling at its stated position, "
        f"as required by {label}." )


def create_certificate_failure_exception(
    exception_class_provider, claim, invocation
):
    ''' Creates error about a certificate which fails its exact check. '''
    from .nomenclature import calculate_invocable_label
    label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_certificate_failure_exception,
        'InvalidState',
        f"Certificate produced by {label} fails exact check: {claim}. "
        "Please report to the 'sturmhull' package maintainers." )


def create_inexact_data_exception(
    exception_class_provider, name, invocation
):
    ''' Creates error about approximate data given to an exact decision. '''
    from .nomenclature import (
        calculate_argument_label,
        calculate_invocable_label,
    )
    argument_label = calculate_argument_label( name, invocation )
    invocation_label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_inexact_data_exception,
        'IncorrectData',
        f"Approximate {argument_label} cannot be used by exact decision "
        f"{invocation_label}." )


def create_nonprimitive_rule_exception(
    exception_class_provider, rule, invocation
):
    ''' Creates error about a substitution which is not primitive. '''
    from .nomenclature import calculate_invocable_label
    label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_nonprimitive_rule_exception,
        'IncorrectData',
        f"Substitution {rule} is not primitive, as required by {label}." )


def create_parse_failure_exception(
    exception_class_provider, text, position, expectation
):
    ''' Creates error about unparseable text at a given position.

        The position is zero-based and is also recorded under the
        ``position`` label. '''
    pointer = ' ' * position + '^'
    exception = _produce_exception(
        exception_class_provider, create_parse_failure_exception,
        'UnparseableText',
        f"Cannot parse {text!r} at position {position}: "
        f"expected {expectation}.\n  {text}\n  {pointer}",
        position = position )
    return exception


def create_radicand_mismatch_exception(
    exception_class_provider, left, right, operation
):
    ''' Creates error about arithmetic across two quadratic fields. '''
    return _produce_exception(
        exception_class_provider, create_radicand_mismatch_exception,
        'IncorrectData',
        f"Incompatible radicands {left} and {right} for {operation}: "
        "values must share one quadratic field." )


def create_rational_input_exception(
    exception_class_provider, name, invocation
):
    ''' Creates error about a rational value where an irrational is needed.
    '''
    from .nomenclature import (
        calculate_argument_label,
        calculate_invocable_label,
    )
    argument_label = calculate_argument_label( name, invocation )
    invocation_label = calculate_invocable_label( invocation )
    return _produce_exception(
        exception_class_provider, create_rational_input_exception,
        'IncorrectData',
        f"Rational {argument_label} to {invocation_label}: "
        "must be a quadratic irrational." )


def create_vanishing_denominator_exception(
    exception_class_provider, expression
):
    ''' Creates error about division by an exact zero. '''
    return _produce_exception(
        exception_class_provider, create_vanishing_denominator_exception,
        'IndeterminateQuotient',
        f"Denominator of {expression} vanishes exactly." )


def _produce_exception(
    exception_class_provider, factory, class_name, message, **labels
):
    ''' Produces exception by provider with message and failure class. '''
    failure_class = factory.__name__[ len( 'create_' ) : -len( '_exception' ) ]
    exception_labels = { 'failure class': failure_class }
    exception_labels.update( labels )
    return exception_class_provider( class_name )(
        message, exception_labels = exception_labels )
