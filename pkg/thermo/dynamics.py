"""
Dinâmica da memória: medição com estado pós-medição puro e rotações reversíveis.
"""
from gpt.builders import hypercube_vertex
from gpt.operations import measure
from thermo.validators import validate_setting


def post_measurement_state(zeta, setting):
    """
    Mede a configuração `setting` (0-based) do vértice ζ. O resultado é ζ_setting;
    o estado seguinte guarda o resultado nessa coordenada e zera as demais.
    """
    zeta = tuple(zeta)
    validate_setting(setting, len(zeta))
    distribution = measure(hypercube_vertex(zeta), setting)
    outcome = distribution.index(max(distribution))
    after = tuple(outcome if position == setting else 0 for position in range(len(zeta)))
    return outcome, after


def apply_reversible(zeta, transform):
    return transform.apply(tuple(zeta))
