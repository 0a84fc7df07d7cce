import logging

from octahedral import algebra

logger = logging.getLogger(__name__)

get_dirac_relations_definition = {
    "name": "get_dirac_relations",
    "description": "Squares and pairwise relations of i, j, k, d, id in H beside those of the Dirac matrices.",
    "parameters": {"type": "object", "properties": {}, "required": []}
}


def get_dirac_relations() -> dict:
    logger.info("Building the Dirac relation table")
    table = algebra.dirac_relation_table()
    result = table.to_json()
    result["deviations"] = [list(pair) for pair in table.deviations()]
    return result
