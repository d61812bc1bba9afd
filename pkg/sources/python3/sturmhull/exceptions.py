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


''' Classes of exceptions emitted by the functionality of this package.

    :py:exc:`Omniexception` is the ancestor of all the exception classes. It
    has an ``exception_labels`` attribute which carries information beyond
    what a class alone can convey, such as the factory which produced the
    exception. We prefer labels over deep class hierarchies. However, callers
    reasonably expect to catch a division by zero as
    :py:exc:`ZeroDivisionError` or a bad literal as :py:exc:`ValueError`. So,
    variants of the omniexception class, fused to the relevant builtin
    exception classes, are provided:

    .. code-block:: python

        >>> from sturmhull.exactnum import QuadraticNumber
        >>> from sturmhull.exceptions import IndeterminateQuotient
        >>> try: QuadraticNumber( 1, 1, 2 ) / 0
        ... except ZeroDivisionError as exc: type( exc ).mro( )
        ...
        [<class 'sturmhull.exceptions.IndeterminateQuotient'>, <class 'sturmhull.exceptions.InvalidOperation'>, <class 'sturmhull.exceptions.Omniexception'>, <class 'ZeroDivisionError'>, <class 'ArithmeticError'>, <class 'Exception'>, <class 'BaseException'>, <class 'object'>]
    ''' # pylint: disable=line-too-long


#---------------------------------- Roots -----------------------------------#


class Omniexception( BaseException ):
    ''' Base for all exceptions in the package. '''

    def __init__( self, *posargs, exception_labels = None, **nomargs ):
        from collections.abc import Mapping as Dictionary
        from types import MappingProxyType as DictionaryProxy
        self.exception_labels = (
            DictionaryProxy( dict( exception_labels ) )
            if isinstance( exception_labels, Dictionary )
            else DictionaryProxy( { } ) )
        super( ).__init__( *posargs, **nomargs )


#----------------------------- Invalid Operations ---------------------------#


class InvalidOperation( Omniexception, Exception ):
    ''' Complaint about invalid operation. '''


class ImpermissibleOperation( InvalidOperation, TypeError ):
    ''' Complaint about impermissible operation. '''


class ImpermissibleAttributeOperation(
    ImpermissibleOperation, AttributeError
):
    ''' Complaint about attempt to alter an immutable attribute.

        Fused with :py:exc:`AttributeError` because :py:mod:`copy` and other
        parts of the standard library expect it on frozen objects. '''


class IncorrectData( InvalidOperation, TypeError, ValueError ):
    ''' Complaint about incorrect data for invocation or operation.

        Raised for every violated precondition of the exact algorithms:
        incompatible radicands, rational input where an irrational is needed,
        non-primitive substitutions, absent patches, and the like. '''


class IndeterminateQuotient( InvalidOperation, ZeroDivisionError ):
    ''' Complaint about division by an exact zero. '''


class UnparseableText( IncorrectData ):
    ''' Complaint about text which does not follow an accepted grammar.

        Carries the offending position in its ``exception_labels``. '''


#------------------------------- Invalid State ------------------------------#


class InvalidState( Omniexception, RuntimeError ):
    ''' Alert about invalid internal state in the package.

        Also raised when a produced certificate fails its own exact check. '''
