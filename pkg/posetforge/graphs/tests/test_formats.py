import unittest

import networkx as nx

from posetforge.base.errors import GraphFormatError
from posetforge.base.graph import Graph
from posetforge.graphs.formats import (format_edge_list, format_graph6,
                                       from_networkx, parse_edge_list,
                                       parse_graph6, parse_graph_input,
                                       to_networkx)


class Graph6TestCase(unittest.TestCase):

    def test_known_strings(self):
        self.assertEqual(parse_graph6('A_'), Graph.complete(2))
        self.assertEqual(parse_graph6('@'), Graph(1))
        self.assertEqual(parse_graph6('?'), Graph.null())
        self.assertEqual(parse_graph6('Bw'), Graph.complete(3))
        self.assertEqual(format_graph6(Graph.complete(2)), 'A_')
        self.assertEqual(format_graph6(Graph.complete(3)), 'Bw')

    def test_header_and_newline(self):
        self.assertEqual(parse_graph6('>>graph6<<A_\n'), Graph.complete(2))
        self.assertEqual(parse_graph6(b'A_'), Graph.complete(2))

    def test_agrees_with_networkx(self):
        for g in (Graph.path(5), Graph.cycle(7), Graph.star(6),
                  Graph.complete(5).add_isolated(2)):
            text = format_graph6(g)
            decoded = nx.from_graph6_bytes(text.encode('ascii'))
            self.assertEqual(from_networkx(decoded), g)
            self.assertEqual(parse_graph6(text), g)

    def test_errors_carry_offsets(self):
        with self.assertRaises(GraphFormatError) as cm:
            parse_graph6('C')
        self.assertEqual(cm.exception.offset, 1)
        with self.assertRaises(GraphFormatError) as cm:
            parse_graph6('A_x')
        self.assertEqual(cm.exception.offset, 2)
        with self.assertRaises(GraphFormatError) as cm:
            parse_graph6('A ')
        self.assertEqual(cm.exception.offset, 1)
        with self.assertRaises(GraphFormatError):
            parse_graph6('')
        with self.assertRaises(ValueError):
            parse_graph6('~')


class EdgeListTestCase(unittest.TestCase):

    def test_parse(self):
        g = parse_edge_list('n=4; 0-1,1-2,2-3')
        self.assertEqual(g, Graph.path(4))
        self.assertEqual(parse_edge_list('n=3'), Graph(3))
        self.assertEqual(parse_edge_list('n=2;'), Graph(2))

    def test_format(self):
        self.assertEqual(format_edge_list(Graph.path(3)), 'n=3; 0-1,1-2')
        g = Graph.cycle(5)
        self.assertEqual(parse_edge_list(format_edge_list(g)), g)

    def test_errors(self):
        with self.assertRaises(GraphFormatError):
            parse_edge_list('4; 0-1')
        with self.assertRaises(GraphFormatError):
            parse_edge_list('n=3; 0-3')
        with self.assertRaises(GraphFormatError):
            parse_edge_list('n=3; 1-1')
        with self.assertRaises(GraphFormatError) as cm:
            parse_edge_list('n=3; 0-1,x')
        self.assertEqual(cm.exception.offset, 9)

    def test_input_dispatch(self):
        self.assertEqual(parse_graph_input('n=2; 0-1'), Graph.complete(2))
        self.assertEqual(parse_graph_input(' A_ '), Graph.complete(2))

    def test_networkx_roundtrip(self):
        g = Graph.complete(3).disjoint_union(Graph.path(2))
        self.assertEqual(from_networkx(to_networkx(g)), g)


if __name__ == '__main__':
    unittest.main()
