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


''' Invocation boundary protection.

    Public operations of the package are decorated with
    :py:data:`our_interceptor`. Arguments which do not bind to the signature
    of an operation are reported as
    :py:exc:`sturmhull.exceptions.IncorrectData`. Exceptions which are not
    descended from :py:exc:`sturmhull.exceptions.Omniexception` and which
    escape an operation are "fugitives"; they are apprehended and replaced by
    :py:exc:`sturmhull.exceptions.InvalidState`, with the fugitive as cause.
    '''


from .exceptionality import (
    our_exception_factory_provider as _our_exception_factory_provider,
)


def create_interception_decorator( exception_factory_provider, apprehender ):
    ''' Creates function decorator to apprehend "fugitive" exceptions.

        The ``exception_factory_provider`` must provide a factory named
        ``invocation_validation``, which is used on arguments that do not
        bind to the signature of the decorated function.

        The ``apprehender`` takes the escaping exception and the decorated
        function. It returns a pair. The first member is the original
        exception or ``None``; the second is a replacement exception or
        ``None``.

        * ``( exception, None )``: the original exception propagates.

        * ``( exception, replacement )``: the replacement propagates with the
          original as its cause.

        * ``( None, replacement )``: the replacement propagates alone. '''
    from inspect import signature as scan_signature
    if 2 != len( scan_signature( apprehender ).parameters ):
        raise _our_exception_factory_provider( 'argument_validation' )(
            'apprehender', create_interception_decorator,
            'invocable which accepts exception and invocation' )

    def intercept( invocation ):
        ''' Decorates function to apprehend fugitive exceptions. '''
        from functools import wraps
        signature = scan_signature( invocation )

        @wraps( invocation )
        def interception_invoker( *posargs, **nomargs ):
            ''' Intercepts function invocations and apprehends fugitives. '''
            try: signature.bind( *posargs, **nomargs )
            except TypeError as exc:
                raise exception_factory_provider( 'invocation_validation' )(
                    invocation, str( exc ) ) from exc
            try: return invocation( *posargs, **nomargs )
            except BaseException as exc: # pylint: disable=broad-except
                origin, custodian = apprehender( exc, invocation )
                if None is custodian: raise
                if origin: raise custodian from origin
                raise custodian from None

        return interception_invoker

    return intercept


def our_fugitive_exception_apprehender( exception, invocation ):
    ''' Apprehends fugitive exceptions at API boundary.

        Package exceptions pass through. So do interrupts and exits, which are
        never the fault of an operation. '''
    from .exceptions import Omniexception
    passable = ( Omniexception, KeyboardInterrupt, SystemExit, GeneratorExit )
    if isinstance( exception, passable ): return exception, None
    return (
        exception,
        _our_exception_factory_provider( 'fugitive_apprehension' )(
            exception, invocation ) )


#: Intercepts invocations within this package.
our_interceptor = create_interception_decorator(
    _our_exception_factory_provider, our_fugitive_exception_apprehender )
