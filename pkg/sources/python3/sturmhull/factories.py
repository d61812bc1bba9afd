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


''' Immutable classes, namespaces, and value objects.

    Every exact value in the package (quadratic numbers, continued fractions,
    matrices, tilings, graphs) derives from :py:class:`ValueObject`, so it
    can be shared freely once constructed:

    .. code-block:: python

        >>> from sturmhull.exactnum import QuadraticNumber
        >>> golden = QuadraticNumber( 1, 1, 5 ) / 2
        >>> golden.surd_part = 0
        Traceback (most recent call last):
        ...
        sturmhull.exceptions.ImpermissibleAttributeOperation: Attempt to assign immutable attribute 'surd_part' on instance of class 'sturmhull.exactnum.QuadraticNumber'.
    ''' # pylint: disable=line-too-long


from .interception import our_interceptor as _our_interceptor
from .nomenclature import (
    is_public_name as _is_public_name,
    select_public_attributes as _select_public_attributes,
)


class Class( type ):
    ''' Produces classes which have immutable attributes.

        Non-public attributes of each class are concealed from :py:func:`dir`.
        '''

    __slots__ = ( )

    @_our_interceptor
    def __new__( factory, name, bases, namespace ):
        return super( ).__new__( factory, name, bases, namespace )

    def __setattr__( class_, name, value ):
        from .exceptionality import our_exception_factory_provider
        from .validators import validate_attribute_name
        validate_attribute_name( name )
        raise our_exception_factory_provider(
            'attribute_immutability' )( name, class_ )

    def __delattr__( class_, name ):
        from .exceptionality import our_exception_factory_provider
        from .validators import (
            validate_attribute_existence,
            validate_attribute_name,
        )
        validate_attribute_name( name )
        validate_attribute_existence( name, class_ )
        raise our_exception_factory_provider(
            'attribute_indelibility' )( name, class_ )

    def __dir__( class_ ):
        return _select_public_attributes( __class__, class_ )


class NamespaceClass( Class, metaclass = Class ):
    ''' Produces namespace classes which have immutable attributes.

        Each produced namespace is a unique class, which cannot be
        instantiated. Modules of this package gather their imports into such
        a namespace, named ``__``. '''

    @_our_interceptor
    def __new__( factory, name, bases, namespace ):
        for aname in namespace:
            if aname in _class_dunders: continue
            if _is_public_name( aname ): continue
            from .exceptionality import our_exception_factory_provider
            raise our_exception_factory_provider(
                'class_attribute_rejection' )( aname, namespace )
        def __new__( kind, *posargs, **nomargs ): # pylint: disable=unused-argument
            from .exceptionality import our_exception_factory_provider
            raise our_exception_factory_provider(
                'impermissible_instantiation' )( kind )
        namespace[ '__new__' ] = __new__
        return super( ).__new__( factory, name, bases, namespace )

    def __repr__( kind ):
        entries = ", ".join(
            f"{aname!r}: {avalue!r}" for aname, avalue
            in kind.__dict__.items( ) if _is_public_name( aname ) )
        factory_name = type( kind ).__qualname__
        return f"{factory_name}( {kind.__name__!r}, {{ {entries} }} )"


_class_dunders = (
    '__doc__', '__module__', '__qualname__',
    '__firstlineno__', '__static_attributes__',
)


def create_namespace( **nomargs ):
    ''' Creates immutable namespaces from nominative arguments.

        Used for the settings of the package. '''
    namespace = { '__module__': __package__, '__qualname__': 'Namespace' }
    namespace.update( nomargs )
    return NamespaceClass( 'Namespace', ( ), namespace )


class ValueObject( metaclass = Class ):
    ''' Base for exact values whose attributes are fixed at construction.

        Subclasses declare their fields in ``__slots__`` and assign them once,
        in ``__init__``, through :py:meth:`_establish`. Equality, hashing, and
        representation follow the declared fields, in declaration order. '''

    __slots__ = ( )

    def _establish( self, **fields ):
        for name, value in fields.items( ):
            object.__setattr__( self, name, value )

    @classmethod
    def _fields( kind ):
        names = [ ]
        for class_ in reversed( kind.__mro__ ):
            names.extend( getattr( class_, '__slots__', ( ) ) )
        return tuple( names )

    def _values( self ):
        return tuple( getattr( self, name ) for name in self._fields( ) )

    def __setattr__( self, name, value ):
        from .exceptionality import our_exception_factory_provider
        raise our_exception_factory_provider(
            'attribute_immutability' )( name, self )

    def __delattr__( self, name ):
        from .exceptionality import our_exception_factory_provider
        raise our_exception_factory_provider(
            'attribute_indelibility' )( name, self )

    def __eq__( self, other ):
        if type( self ) is not type( other ): return NotImplemented
        return self._values( ) == other._values( )

    def __hash__( self ):
        return hash( ( type( self ).__qualname__, self._values( ) ) )

    def __repr__( self ):
        arguments = ", ".join(
            f"{name} = {getattr( self, name )!r}"
            for name in self._fields( ) )
        return f"{type( self ).__qualname__}( {arguments} )"
