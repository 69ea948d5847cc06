"""
Clique máximo exato por branch and bound, com limite superior dado por
coloração gulosa dos candidatos.
"""
import networkx as nx


def _color_sort(candidates, adjacency):
    """
    Coloração sequencial gulosa. Retorna os candidatos em ordem crescente
    de cor, junto com a cor (1-based) de cada um.
    """
    classes = []
    for vertex in candidates:
        neighbours = adjacency[vertex]
        for members in classes:
            if not neighbours & members:
                members.add(vertex)
                break
        else:
            classes.append({vertex})
    ordered, colors = [], []
    for color, members in enumerate(classes, start=1):
        for vertex in sorted(members):
            ordered.append(vertex)
            colors.append(color)
    return ordered, colors


def _is_clique(vertices, adjacency):
    members = set(vertices)
    return all(members - {v} <= adjacency[v] for v in vertices)


def maximum_clique(graph: nx.Graph):
    """
    (tamanho, clique) de um clique máximo de `graph`.

    O clique devolvido é ordenado; entre cliques do mesmo tamanho vence o
    primeiro encontrado, o que depende só da ordem dos vértices.
    """
    if graph.number_of_nodes() == 0:
        return 0, ()
    adjacency = {v: set(graph.adj[v]) for v in graph.nodes}

    # a ordem inicial vem de uma coloração gulosa por grau (maiores primeiro)
    coloring = nx.coloring.greedy_color(graph, strategy='largest_first')
    initial = sorted(graph.nodes, key=lambda v: (coloring[v], v))

    best = [min(graph.nodes)]

    def expand(current, candidates):
        nonlocal best
        if _is_clique(candidates, adjacency):
            if len(current) + len(candidates) > len(best):
                best = sorted(current + list(candidates))
            return
        ordered, colors = _color_sort(candidates, adjacency)
        remaining = set(ordered)
        for position in range(len(ordered) - 1, -1, -1):
            if len(current) + colors[position] <= len(best):
                return
            vertex = ordered[position]
            narrowed = [v for v in ordered if v in remaining and v in adjacency[vertex]]
            if narrowed:
                expand(current + [vertex], narrowed)
            elif len(current) + 1 > len(best):
                best = sorted(current + [vertex])
            remaining.discard(vertex)

    expand([], initial)
    return len(best), tuple(best)
