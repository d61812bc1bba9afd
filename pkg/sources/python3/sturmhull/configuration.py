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


''' Settings from the process environment, and scribes for logging.

    Entries are named ``STURMHULL_<NAME>``:

    * ``STURMHULL_RECORD_LEVEL``: level of the package scribes
      (default ``WARNING``).
    * ``STURMHULL_FLOAT_PRECISION``: bits used when exact values are rendered
      as floats (default ``64``, minimum ``32``).
    * ``STURMHULL_LANGUAGE_DEPTH``: longest factor compared when validating a
      substitutive representative (default ``15``).
    * ``STURMHULL_IMAGE_LIMIT``: most letters, over all images, for which a
      composed substitution is written out explicitly (default ``4096``). '''


from logging import getLogger as _acquire_scribe

from .factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from .exceptionality import our_exception_factory_provider
    from .factories import create_namespace


def derive_environment_entry_name( *parts ):
    ''' Derives environment entry name from parts.

        >>> derive_environment_entry_name( 'record', 'level' )
        'STURMHULL_RECORD_LEVEL'
    '''
    return '_'.join( map( str.upper, ( __package__, *parts ) ) )


def view_environment_entry( parts, default = None ):
    ''' Views environment entry, falling back to a default. '''
    from os import environ as current_process_environment
    return current_process_environment.get(
        derive_environment_entry_name( *parts ), default )


def calculate_settings( ):
    ''' Calculates immutable settings namespace from the environment. '''
    return __.create_namespace(
        record_level = view_environment_entry(
            ( 'record', 'level' ), 'WARNING' ).upper( ),
        float_precision = _view_integral_entry(
            ( 'float', 'precision' ), 64, 32 ),
        language_depth = _view_integral_entry(
            ( 'language', 'depth' ), 15, 1 ),
        image_limit = _view_integral_entry(
            ( 'image', 'limit' ), 4096, 1 ),
    )


def _view_integral_entry( parts, default, minimum ):
    entry = view_environment_entry( parts, None )
    if None is entry: return default
    try: value = int( entry )
    except ValueError: value = minimum - 1
    if minimum <= value: return value
    raise __.our_exception_factory_provider( 'argument_validation' )(
        derive_environment_entry_name( *parts ), calculate_settings,
        f"integer at least {minimum}" )


def acquire_scribe( name = None ):
    ''' Acquires scribe (logger) within the package hierarchy. '''
    if None is name: return _acquire_scribe( __package__ )
    if name == __package__ or name.startswith( f"{__package__}." ):
        return _acquire_scribe( name )
    return _acquire_scribe( f"{__package__}.{name}" )


def configure_scribe( level = None ):
    ''' Configures package scribe for console output.

        The level defaults to the ``STURMHULL_RECORD_LEVEL`` entry. '''
    from logging import basicConfig as configure_logging
    if None is level: level = calculate_settings( ).record_level
    configure_logging( format = "%(levelname)s\t%(message)s" )
    scribe = acquire_scribe( )
    scribe.setLevel( level )
    return scribe


#: Settings of the package, read once at import.
settings = calculate_settings( )
