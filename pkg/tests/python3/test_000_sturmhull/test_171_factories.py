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


''' Ensure correctness of class factories and value objects. '''


from fractions import Fraction

from pytest import raises

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions
    from sturmhull.factories import (
        Class,
        NamespaceClass,
        ValueObject,
        create_namespace,
    )


class _Interval( __.ValueObject ):
    ''' Test value object. '''

    __slots__ = ( 'low', 'high' )

    def __init__( self, low, high ):
        self._establish( low = low, high = high )


class _LabelledInterval( _Interval ):
    ''' Test value object with inherited fields. '''

    __slots__ = ( 'label', )

    def __init__( self, low, high, label ):
        super( ).__init__( low, high )
        self._establish( label = label )


def test_011_produce_class( ):
    ''' Normal production of class. '''
    class Object( metaclass = __.Class ): ''' Test class. '''
    assert isinstance( Object, __.Class )


def test_012_class_attributes_immutable( ):
    ''' Attributes of produced classes cannot be assigned or deleted. '''
    class Object( metaclass = __.Class ):
        ''' Test class. '''
        answer = 42
    with raises( __.exceptions.ImpermissibleAttributeOperation ):
        Object.answer = 43
    with raises( __.exceptions.ImpermissibleAttributeOperation ):
        del Object.answer
    assert 42 == Object.answer


def test_013_class_conceals_private_attributes( ):
    ''' Directory of produced class omits private attributes. '''
    class Object( metaclass = __.Class ):
        ''' Test class. '''
        answer = 42
        _hidden = 0
    assert 'answer' in dir( Object )
    assert '_hidden' not in dir( Object )


def test_111_produce_namespace( ):
    ''' Normal production of namespace. '''
    class Namespace( metaclass = __.NamespaceClass ):
        ''' Test namespace. '''
        answer = 42
    assert isinstance( Namespace, __.NamespaceClass )
    assert 42 == Namespace.answer


def test_116_fail_to_produce_instantiable_namespace( ):
    ''' No production of namespace with possible instantiation. '''
    with raises( __.exceptions.InvalidOperation ):
        class Namespace( metaclass = __.NamespaceClass ): # pylint: disable=unused-variable
            ''' Test namespace. '''
            def __new__( class_, *pos_arguments, **nom_arguments ):
                return super( class_, __.NamespaceClass ).__new__(
                    *pos_arguments, **nom_arguments )


def test_117_fail_to_instantiate_namespace( ):
    ''' Namespaces cannot be instantiated. '''
    class Namespace( metaclass = __.NamespaceClass ):
        ''' Test namespace. '''
    with raises( __.exceptions.ImpermissibleOperation ): Namespace( )


def test_151_create_namespace( ):
    ''' Produce namespace via factory. '''
    namespace = __.create_namespace( answer = 42 )
    assert isinstance( namespace, __.NamespaceClass )
    assert 42 == namespace.answer
    assert "'answer': 42" in repr( namespace )


def test_211_value_object_equality( ):
    ''' Value objects compare and hash by their fields. '''
    interval = _Interval( 0, Fraction( 1, 2 ) )
    assert _Interval( 0, Fraction( 1, 2 ) ) == interval
    assert _Interval( 0, 1 ) != interval
    assert hash( _Interval( 0, Fraction( 1, 2 ) ) ) == hash( interval )
    assert 2 == len( { interval, _Interval( 0, 1 ), _Interval( 0, 1 ) } )


def test_212_value_object_class_matters( ):
    ''' Value objects of distinct classes are unequal. '''
    assert _Interval( 0, 1 ) != _LabelledInterval( 0, 1, 'a' )


def test_213_value_object_inherited_fields( ):
    ''' Fields of base classes come first. '''
    interval = _LabelledInterval( 0, 1, 'a' )
    assert ( 'low', 'high', 'label' ) == interval._fields( ) # pylint: disable=protected-access
    assert "_LabelledInterval( low = 0, high = 1, label = 'a' )" == repr(
        interval )


def test_216_value_object_immutable( ):
    ''' Fields of value objects cannot be assigned or deleted. '''
    interval = _Interval( 0, 1 )
    with raises( __.exceptions.ImpermissibleAttributeOperation ):
        interval.low = 2
    with raises( __.exceptions.ImpermissibleAttributeOperation ):
        del interval.low
    assert 0 == interval.low
