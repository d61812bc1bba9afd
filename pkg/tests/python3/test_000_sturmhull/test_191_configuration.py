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


''' Ensure correctness of settings and scribes. '''


from logging import DEBUG, getLogger

from pytest import mark, raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull.configuration import (
        acquire_scribe,
        calculate_settings,
        configure_scribe,
        derive_environment_entry_name,
        settings,
        view_environment_entry,
    )
    from sturmhull.factories import NamespaceClass


def test_011_derive_environment_entry_name( ):
    ''' Entry names are upper case and prefixed by the package. '''
    assert (
        'STURMHULL_FLOAT_PRECISION'
        == __.derive_environment_entry_name( 'float', 'precision' ) )


def test_021_view_environment_entry( monkeypatch ):
    ''' Entries are read from the environment, with fallback. '''
    monkeypatch.setenv( 'STURMHULL_SOME_ENTRY', 'value' )
    assert 'value' == __.view_environment_entry( ( 'some', 'entry' ) )
    monkeypatch.delenv( 'STURMHULL_SOME_ENTRY' )
    assert 'fallback' == __.view_environment_entry(
        ( 'some', 'entry' ), 'fallback' )


def test_031_default_settings( monkeypatch ):
    ''' Settings fall back to their defaults. '''
    for name in (
        'RECORD_LEVEL', 'FLOAT_PRECISION', 'LANGUAGE_DEPTH', 'IMAGE_LIMIT'
    ):
        monkeypatch.delenv( f"STURMHULL_{name}", raising = False )
    settings = __.calculate_settings( )
    assert isinstance( settings, __.NamespaceClass )
    assert 'WARNING' == settings.record_level
    assert 64 == settings.float_precision
    assert 15 == settings.language_depth
    assert 4096 == settings.image_limit


def test_032_settings_from_environment( monkeypatch ):
    ''' Settings follow the environment. '''
    monkeypatch.setenv( 'STURMHULL_RECORD_LEVEL', 'debug' )
    monkeypatch.setenv( 'STURMHULL_FLOAT_PRECISION', '128' )
    monkeypatch.setenv( 'STURMHULL_LANGUAGE_DEPTH', '20' )
    monkeypatch.setenv( 'STURMHULL_IMAGE_LIMIT', '64' )
    settings = __.calculate_settings( )
    assert 'DEBUG' == settings.record_level
    assert 128 == settings.float_precision
    assert 20 == settings.language_depth
    assert 64 == settings.image_limit


@mark.parametrize( 'value', ( '16', 'many', '31' ) )
def test_036_invalid_precision( monkeypatch, value ):
    ''' Precisions must be integers of at least 32 bits. '''
    monkeypatch.setenv( 'STURMHULL_FLOAT_PRECISION', value )
    with raises( __.exceptions.IncorrectData ): __.calculate_settings( )


@mark.parametrize( 'value', ( '0', '-4', 'all' ) )
def test_037_invalid_image_limit( monkeypatch, value ):
    ''' Image limits must be positive integers. '''
    monkeypatch.setenv( 'STURMHULL_IMAGE_LIMIT', value )
    with raises( __.exceptions.IncorrectData ): __.calculate_settings( )


def test_038_settings_immutable( ):
    ''' Settings cannot be altered. '''
    with raises( __.exceptions.ImpermissibleAttributeOperation ):
        __.settings.float_precision = 32


@mark.parametrize(
    'name, expectation',
    (
        ( None, 'sturmhull' ),
        ( 'sturmhull', 'sturmhull' ),
        ( 'sturmhull.hull', 'sturmhull.hull' ),
        ( 'cli', 'sturmhull.cli' ),
    )
)
def test_041_acquire_scribe( name, expectation ):
    ''' Scribes live within the package hierarchy. '''
    assert expectation == __.acquire_scribe( name ).name


def test_051_configure_scribe( ):
    ''' Configuration sets the level of the package scribe. '''
    scribe = getLogger( 'sturmhull' )
    level = scribe.level
    try:
        assert scribe is __.configure_scribe( 'DEBUG' )
        assert DEBUG == scribe.level
    finally: scribe.setLevel( level )
