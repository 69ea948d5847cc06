"""
Álgebra linear exata sobre racionais (eliminação de Gauss-Jordan).

Matrizes são listas de linhas; nada aqui usa ponto flutuante.
"""
from core.rationals import ONE, ZERO, Rational


def _copy(matrix):
    return [[Rational(value) for value in row] for row in matrix]


def row_reduce(matrix):
    """
    Forma escalonada reduzida de `matrix`.

    Retorna (linhas reduzidas, colunas pivô). Linhas nulas são descartadas.
    """
    rows = _copy(matrix)
    if not rows:
        return [], []
    width = len(rows[0])
    pivots = []
    rank = 0
    for column in range(width):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][column]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][column]
        if pivot != ONE:
            rows[rank] = [value / pivot for value in rows[rank]]
        support = [j for j, value in enumerate(rows[rank]) if value]
        for r, row in enumerate(rows):
            factor = row[column]
            if r != rank and factor:
                for j in support:
                    row[j] -= factor * rows[rank][j]
        pivots.append(column)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def rank(matrix):
    return len(row_reduce(matrix)[1])


def solve(matrix, rhs):
    """
    Uma solução de matrix · x = rhs (variáveis livres em zero), ou None se
    o sistema é inconsistente.
    """
    width = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs, strict=True)]
    rows, pivots = row_reduce(augmented)
    if pivots and pivots[-1] == width:
        return None
    solution = [ZERO] * width
    for row, column in zip(rows, pivots):
        solution[column] = row[width]
    return tuple(solution)


def solve_unique(matrix, rhs):
    """Solução de um sistema com solução única; None se singular ou inconsistente"""
    width = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs, strict=True)]
    rows, pivots = row_reduce(augmented)
    if len(pivots) != width or (pivots and pivots[-1] == width):
        return None
    return tuple(row[width] for row in rows)


def nullspace(matrix, width=None):
    """Base do núcleo {x : matrix · x = 0}, um vetor por variável livre"""
    width = len(matrix[0]) if matrix else (width or 0)
    rows, pivots = row_reduce(matrix) if matrix else ([], [])
    free = [column for column in range(width) if column not in pivots]
    basis = []
    for column in free:
        vector = [ZERO] * width
        vector[column] = ONE
        for row, pivot in zip(rows, pivots):
            vector[pivot] = -row[column]
        basis.append(tuple(vector))
    return basis


def affine_basis(points):
    """
    Índices de um subconjunto afimmente independente maximal de `points`,
    escolhido gulosamente na ordem dada.
    """
    points = [tuple(Rational(v) for v in point) for point in points]
    if not points:
        return []
    origin = points[0]
    chosen = [0]
    # vetores já reduzidos, indexados pela coluna pivô
    reduced = {}
    for index, point in enumerate(points[1:], start=1):
        vector = [p - o for p, o in zip(point, origin)]
        for column, row in reduced.items():
            factor = vector[column]
            if factor:
                vector = [v - factor * r for v, r in zip(vector, row)]
        column = next((j for j, value in enumerate(vector) if value), None)
        if column is None:
            continue
        pivot = vector[column]
        vector = [value / pivot for value in vector]
        for other_column, row in reduced.items():
            factor = row[column]
            if factor:
                reduced[other_column] = [r - factor * v for r, v in zip(row, vector)]
        reduced[column] = vector
        chosen.append(index)
    return chosen


def affine_coordinates(point, basis_points):
    """
    λ com Σ λ_b = 1 e Σ λ_b · b = point, ou None se `point` está fora do
    afim gerado pela base.
    """
    count = len(basis_points)
    matrix = [
        [basis_points[b][coordinate] for b in range(count)]
        for coordinate in range(len(point))
    ]
    matrix.append([ONE] * count)
    return solve_unique(matrix, list(point) + [ONE])
