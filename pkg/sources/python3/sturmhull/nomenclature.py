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


''' Labels for objects in messages, and visibility of names. '''


# Latent Dependencies:
#   nomenclature -> exceptionality -> nomenclature
# pylint: disable=cyclic-import


def calculate_apex_package_name( source ):
    ''' Calculates name of apex package from module object or package name. '''
    from inspect import ismodule as is_module
    if is_module( source ): package_name = source.__package__
    elif isinstance( source, str ): package_name = source
    else:
        raise _provide_exception_factory( 'argument_validation' )(
            'source', calculate_apex_package_name,
            'module object or complete package name' )
    return package_name.split( '.', maxsplit = 1 )[ 0 ]


def calculate_label( object_, attribute_label = None ):
    ''' Produces human-comprehensible label, based on classification. '''
    from inspect import isclass as is_class, ismodule as is_module
    if is_module( object_ ): label = f"module '{object_.__name__}'"
    elif is_class( object_ ): label = calculate_class_label( object_ )
    else:
        label = "instance of class '{}'".format(
            module_qualify_class_name( type( object_ ) ) )
    if not attribute_label: return label
    return f"{attribute_label} on {label}"


def calculate_class_label( classes, attribute_label = None ):
    ''' Produces human-comprehensible label for class or tuple of classes.

        Each provided class may be a class object or namespace dictionary
        that is present during class creation. '''
    from collections.abc import Mapping as Dictionary
    from inspect import isclass as is_class
    if is_class( classes ) or isinstance( classes, Dictionary ):
        classes = ( classes, )
    label = ' or '.join(
        "class '{}'".format( module_qualify_class_name( class_ ) )
        for class_ in classes )
    if not attribute_label: return label
    return f"{attribute_label} on {label}"


def calculate_invocable_label( invocable ):
    ''' Produces human-comprehensible label for invocable object.

        Functions are labelled with their modules, methods with their classes.
        Anything else invocable is labelled by its class. '''
    if isinstance( invocable, str ): return invocable
    from inspect import (
        isclass as is_class,
        ismethod as is_method,
        isroutine as is_routine,
    )
    if is_class( invocable ): return calculate_class_label( invocable )
    if not is_routine( invocable ):
        return "invocable {}".format( calculate_label( invocable ) )
    name = invocable.__name__
    qname = getattr( invocable, '__qualname__', name )
    mname = getattr( invocable, '__module__', None ) or 'builtins'
    if '<lambda>' == qname: return f"lambda from module '{mname}'"
    if is_method( invocable ):
        return calculate_label( invocable.__self__, f"method '{name}'" )
    if name == qname: return f"function '{name}' on module '{mname}'"
    class_qname = qname.rsplit( '.', maxsplit = 1 )[ 0 ]
    return f"function '{name}' on class '{mname}.{class_qname}'"


def calculate_argument_label( name, invocation ):
    ''' Produces human-comprehensible label for argument of invocation. '''
    from inspect import Parameter as Variate, signature as scan_signature
    try: signature = scan_signature( invocation )
    except ( TypeError, ValueError ): return f"argument '{name}'"
    if name not in signature.parameters: return f"argument '{name}'"
    species = signature.parameters[ name ].kind
    position = tuple( signature.parameters ).index( name )
    if Variate.POSITIONAL_ONLY is species:
        return f"positional argument #{position}"
    if Variate.POSITIONAL_OR_KEYWORD is species:
        return f"argument '{name}' (position #{position})"
    if Variate.VAR_POSITIONAL is species:
        return f"sequence of extra positional arguments '{name}'"
    if Variate.VAR_KEYWORD is species:
        return f"dictionary of extra nominative arguments '{name}'"
    return f"argument '{name}'"


def module_qualify_class_name( class_ ):
    ''' Concatenates module name and qualified name of class.

        Also supports class namespace dictionaries. '''
    from inspect import isclass as is_class
    if is_class( class_ ): return f"{class_.__module__}.{class_.__qualname__}"
    try: return f"{class_[ '__module__' ]}.{class_[ '__qualname__' ]}"
    except ( KeyError, TypeError, ): pass
    raise _provide_exception_factory( 'argument_validation' )(
        'class_', module_qualify_class_name,
        'class or class namespace dictionary' )


def is_python_identifier( name ):
    ''' Is object a legal Python identifier? Excludes Python keywords. '''
    from keyword import iskeyword as is_keyword
    return (    isinstance( name, str )
            and name.isidentifier( )
            and not is_keyword( name ) )


def is_public_name( name ):
    ''' Is attribute name considered public? '''
    return isinstance( name, str ) and not name.startswith( '_' )


def select_public_attributes( class_, object_ ):
    ''' Selects public attributes, as reported by superclass of class.

        Used by ``__dir__`` of the immutable classes and modules. '''
    return tuple( sorted(
        name for name in super( class_, object_ ).__dir__( )
        if is_public_name( name ) ) )


def _provide_exception_factory( name ):
    ''' Provides package-internal exception factory. '''
    from .exceptionality import our_exception_factory_provider
    return our_exception_factory_provider( name )
