from gpt.relabeling import find_relabelings


def find_isomorphism(system_a, system_b):
    """Primeira reetiquetagem de A sobre B, ou None"""
    return next(find_relabelings(system_a, system_b), None)


def isomorphic(system_a, system_b):
    """
    Verdadeiro se uma permutação de configurações com permutações de
    resultados por configuração leva os vértices de A exatamente nos de B.
    """
    return find_isomorphism(system_a, system_b) is not None
