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


''' Ensure correctness of package exceptions. '''


from pytest import mark

from sturmhull.factories import NamespaceClass as _NamespaceClass
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from sturmhull import exceptions


@mark.parametrize(
    'exception_class, ancestor_class',
    (
        ( __.exceptions.Omniexception, BaseException ),
        ( __.exceptions.InvalidOperation, __.exceptions.Omniexception ),
        ( __.exceptions.InvalidOperation, Exception ),
        ( __.exceptions.ImpermissibleOperation,
          __.exceptions.InvalidOperation ),
        ( __.exceptions.ImpermissibleOperation, TypeError ),
        ( __.exceptions.ImpermissibleAttributeOperation,
          __.exceptions.ImpermissibleOperation ),
        ( __.exceptions.ImpermissibleAttributeOperation, AttributeError ),
        ( __.exceptions.IncorrectData, __.exceptions.InvalidOperation ),
        ( __.exceptions.IncorrectData, TypeError ),
        ( __.exceptions.IncorrectData, ValueError ),
        ( __.exceptions.IndeterminateQuotient,
          __.exceptions.InvalidOperation ),
        ( __.exceptions.IndeterminateQuotient, ZeroDivisionError ),
        ( __.exceptions.UnparseableText, __.exceptions.IncorrectData ),
        ( __.exceptions.UnparseableText, ValueError ),
        ( __.exceptions.InvalidState, __.exceptions.Omniexception ),
        ( __.exceptions.InvalidState, RuntimeError ),
    )
)
def test_011_ancestry( exception_class, ancestor_class ):
    ''' Exception class is subclass of ancestor class. '''
    assert issubclass( exception_class, ancestor_class )


def test_021_labels_are_immutable_mapping( ):
    ''' Exception labels are copied into a read-only mapping. '''
    labels = { 'position': 3 }
    exception = __.exceptions.UnparseableText(
        'oops', exception_labels = labels )
    labels[ 'position' ] = 4
    assert 3 == exception.exception_labels[ 'position' ]
    try: exception.exception_labels[ 'position' ] = 5
    except TypeError: pass
    else: assert False, 'labels accepted assignment'


def test_022_labels_default_to_empty( ):
    ''' Exceptions without labels carry an empty mapping. '''
    assert not __.exceptions.InvalidState( 'oops' ).exception_labels
