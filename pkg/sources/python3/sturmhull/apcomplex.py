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


''' Anderson-Putnam graphs of substitution tilings.

    Prototiles become edges; endpoints are glued wherever tiles meet in the
    language of the substitution. The substitution induces a self-map of the
    graph, and the tiling space is the inverse limit under that map.

    .. code-block:: python

        >>> from sturmhull.apcomplex import betti1, build_uncollared
        >>> from sturmhull.apcomplex import build_collared
        >>> from sturmhull.substitution import FIBONACCI
        >>> graph = build_uncollared( FIBONACCI )
        >>> len( graph.vertices ), len( graph.edges ), betti1( graph )
        (1, 2, 2)
        >>> graph = build_collared( FIBONACCI )
        >>> len( graph.vertices ), len( graph.edges ), betti1( graph )
        (3, 4, 2)
    '''


from .factories import (
    NamespaceClass as _NamespaceClass,
    ValueObject as _ValueObject,
)
from .interception import our_interceptor as _our_interceptor
class __( metaclass = _NamespaceClass ):
    ''' Internal namespace. '''

    from .configuration import acquire_scribe
    from .exceptionality import our_exception_factory_provider
    from .substitution import SubstitutionRule, apply, is_primitive, perron
    from .validators import (
        validate_argument_class,
        validate_argument_nonnegativity,
        validate_argument_positivity,
    )
    from .words import Word, factors


class CollaredTile( _ValueObject ):
    ''' Tile decorated with the labels of its neighbors. '''

    __slots__ = ( 'left', 'core', 'right' )

    def __init__( self, left, core, right ):
        self._establish( left = left, core = core, right = right )

    def __str__( self ): return f"{self.left}[{self.core}]{self.right}"


class Edge( _ValueObject ):
    ''' Directed edge from the left end (tail) to the right end (head). '''

    __slots__ = ( 'label', 'tail', 'head', 'length' )

    def __init__( self, label, tail, head, length ):
        self._establish(
            label = label, tail = tail, head = head, length = length )


class APGraph( _ValueObject ):
    ''' Branched graph of prototiles with its substitution self-map.

        Vertices are numbered from 0. The self-map sends the edge of each
        position to a path, given as a tuple of edge labels. '''

    __slots__ = ( 'vertices', 'edges', 'self_map', 'expansion', 'collared' )

    def __init__( self, vertices, edges, self_map, expansion, collared ):
        self._establish(
            vertices = tuple( vertices ), edges = tuple( edges ),
            self_map = tuple( map( tuple, self_map ) ),
            expansion = expansion, collared = collared )

    def edge( self, label ):
        ''' Edge of label. '''
        for edge in self.edges:
            if label == edge.label: return edge
        raise __.our_exception_factory_provider( 'argument_validation' )(
            'label', APGraph.edge, 'label of an edge of the graph' )

    def image( self, label ):
        ''' Path of edge labels onto which the edge of label is mapped. '''
        return self.self_map[ self.edges.index( self.edge( label ) ) ]


class ApproximantTower( _ValueObject ):
    ''' Graph with its self-map iterated to a depth.

        Every level of the inverse system is a copy of the graph; the tower
        records the composed images. The vertex map is absent when images do
        not determine one, which happens without border forcing. '''

    __slots__ = ( 'graph', 'depth', 'images', 'vertex_map' )

    def __init__( self, graph, depth, images, vertex_map ):
        self._establish(
            graph = graph, depth = depth,
            images = tuple( map( tuple, images ) ), vertex_map = vertex_map )


@_our_interceptor
def two_factors( rule, n ):
    ''' Factors of length n of the language of a primitive substitution.

        Starting from the letters, factors of length at most n of the images
        of known factors are added until nothing new appears. '''
    __.validate_argument_class(
        rule, __.SubstitutionRule, 'rule', two_factors )
    __.validate_argument_positivity( n, 'n', two_factors )
    if not __.is_primitive( rule )[ 0 ]:
        raise __.our_exception_factory_provider( 'nonprimitive_rule' )(
            rule, two_factors )
    scribe = __.acquire_scribe( __name__ )
    known = { ( letter, ) for letter in rule.alphabet }
    frontier = set( known )
    while frontier:
        found = set( )
        for word in frontier:
            image = __.apply( rule, word ).symbols
            for length in range( 1, n + 1 ):
                found.update( __.factors( image, length ) )
        frontier = found - known
        known |= frontier
    scribe.debug(
        f"Language of {rule} has {len( known )} factors up to length {n}." )
    return frozenset(
        __.Word( word ) for word in known if n == len( word ) )


@_our_interceptor
def build_uncollared( rule ):
    ''' One edge per prototile, glued by the legal pairs of letters. '''
    __.validate_argument_class(
        rule, __.SubstitutionRule, 'rule', build_uncollared )
    data = __.perron( rule )
    labels = rule.alphabet
    gluings = [
        ( ( 'head', left ), ( 'tail', right ) )
        for left, right in map( tuple, two_factors( rule, 2 ) ) ]
    vertices, classes = _glue_ends( labels, gluings )
    edges = tuple(
        Edge(
            label, classes[ ( 'tail', label ) ], classes[ ( 'head', label ) ],
            data.length_of( label ) )
        for label in labels )
    return APGraph(
        vertices, edges, ( rule.image( label ) for label in labels ),
        data.eigenvalue, False )


@_our_interceptor
def build_collared( rule ):
    ''' One edge per legal collared tile, glued by legal 4-letter words.

        The image of a collared tile is read off the image of its three
        letters: the tiles of the image of the core, collared by their
        neighbors. '''
    __.validate_argument_class(
        rule, __.SubstitutionRule, 'rule', build_collared )
    data = __.perron( rule )
    order = { letter: index for index, letter in enumerate( rule.alphabet ) }
    labels = sorted(
        ( CollaredTile( *word ) for word in two_factors( rule, 3 ) ),
        key = lambda tile: (
            order[ tile.core ], order[ tile.left ], order[ tile.right ] ) )
    gluings = [
        ( ( 'head', CollaredTile( *word[ : 3 ] ) ),
          ( 'tail', CollaredTile( *word[ 1 : ] ) ) )
        for word in two_factors( rule, 4 ) ]
    vertices, classes = _glue_ends( labels, gluings )
    edges = tuple(
        Edge(
            label, classes[ ( 'tail', label ) ], classes[ ( 'head', label ) ],
            data.length_of( label.core ) )
        for label in labels )
    return APGraph(
        vertices, edges,
        ( _collared_image( rule, label ) for label in labels ),
        data.eigenvalue, True )


@_our_interceptor
def betti1( graph ):
    ''' First Betti number: edges less vertices plus components. '''
    __.validate_argument_class( graph, APGraph, 'graph', betti1 )
    parents = { vertex: vertex for vertex in graph.vertices }
    for edge in graph.edges:
        _unite( parents, edge.tail, edge.head )
    components = len( {
        _find_root( parents, vertex ) for vertex in graph.vertices } )
    return len( graph.edges ) - len( graph.vertices ) + components


@_our_interceptor
def approximant_tower( graph, n ):
    ''' Self-map of graph composed n times, with its exact checks.

        Image paths must be continuous and, for exact lengths, their total
        length must be the n-th power of the expansion times the length of
        the edge. '''
    __.validate_argument_class( graph, APGraph, 'graph', approximant_tower )
    __.validate_argument_nonnegativity( n, 'n', approximant_tower )
    scribe = __.acquire_scribe( __name__ )
    images = [ ( edge.label, ) for edge in graph.edges ]
    for _ in range( n ):
        images = [
            tuple( label for step in image for label in graph.image( step ) )
            for image in images ]
    scale = graph.expansion ** n
    for edge, image in zip( graph.edges, images ):
        path = [ graph.edge( label ) for label in image ]
        if any(
            step.head != step_.tail
            for step, step_ in zip( path, path[ 1 : ] )
        ):
            raise __.our_exception_factory_provider( 'certificate_failure' )(
                f"image of edge {edge.label} at depth {n} is broken",
                approximant_tower )
        if not _scales_exactly( path, edge.length, scale ):
            raise __.our_exception_factory_provider( 'certificate_failure' )(
                f"image of edge {edge.label} at depth {n} "
                "does not scale by the expansion", approximant_tower )
    vertex_map = _induce_vertex_map( graph, images )
    scribe.debug(
        f"Tower of depth {n} over {len( graph.edges )} edges; "
        f"vertex map {'absent' if None is vertex_map else vertex_map}." )
    return ApproximantTower( graph, n, images, vertex_map )


#--------------------------------- Helpers ----------------------------------#


def _collared_image( rule, tile ):
    word = __.apply( rule, ( tile.left, tile.core, tile.right ) ).symbols
    start = len( rule.image( tile.left ) )
    stop = start + len( rule.image( tile.core ) )
    return tuple(
        CollaredTile( *word[ index - 1 : index + 2 ] )
        for index in range( start, stop ) )


def _find_root( parents, item ):
    while parents[ item ] != item:
        parents[ item ] = parents[ parents[ item ] ]
        item = parents[ item ]
    return item


def _glue_ends( labels, gluings ):
    ''' Vertex numbers of edge ends, after gluing.

        Vertices are numbered by first appearance of their ends, walking the
        labels in order, tail before head. '''
    ends = [
        ( side, label )
        for label in labels for side in ( 'tail', 'head' ) ]
    parents = { end: end for end in ends }
    for end, end_ in gluings: _unite( parents, end, end_ )
    numbers = { }
    classes = { }
    for end in ends:
        root = _find_root( parents, end )
        classes[ end ] = numbers.setdefault( root, len( numbers ) )
    return tuple( range( len( numbers ) ) ), classes


def _induce_vertex_map( graph, images ):
    vertex_map = { }
    for edge, image in zip( graph.edges, images ):
        for vertex, target in (
            ( edge.tail, graph.edge( image[ 0 ] ).tail ),
            ( edge.head, graph.edge( image[ -1 ] ).head ),
        ):
            if vertex_map.setdefault( vertex, target ) != target: return None
    return tuple( vertex_map[ vertex ] for vertex in graph.vertices )


def _scales_exactly( path, length, scale ):
    total = sum( ( step.length for step in path ), 0 * length )
    if isinstance( total, float ) or isinstance( scale, float ):
        return abs( total - scale * length ) <= 1e-9 * abs( scale * length )
    return total == scale * length


def _unite( parents, item, item_ ):
    root, root_ = _find_root( parents, item ), _find_root( parents, item_ )
    if root != root_: parents[ root_ ] = root
