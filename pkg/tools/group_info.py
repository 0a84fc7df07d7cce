import logging

from octahedral.catalog import GROUP_NAMES, group_by_name, named_table
from octahedral.group import classes_json, verify_relations

logger = logging.getLogger(__name__)

# JSON schema for function calling
get_group_info_definition = {
    "name": "get_group_info",
    "description": "Order, generators, conjugacy classes and defining relations of a group in the workbench.",
    "parameters": {
        "type": "object",
        "properties": {
            "group": {
                "type": "string",
                "description": "Group name: G (binary octahedral, order 48), H, K, Q8, 2.Alt4, Z2, 1, 2O, Sym4, Sym3, Sym2, Sym1.",
                "default": "G"
            }
        },
        "required": []
    }
}


def get_group_info(group: str = "G") -> dict:
    """
    Builds the named group and reports its structure.

    - classes come in display order for G, H and K
    - each relation is evaluated exhaustively in the Cayley table; failures are entries, not errors
    """
    logger.info("Fetching group info for %s", group)
    if not group:
        raise ValueError("group is required")
    g = group_by_name(group)
    classes = [g.classes[c] for c in named_table(group).columns] if group in ("G", "H", "K") else None
    relations = verify_relations(g)
    info = classes_json(g, classes)
    info.update({
        "generators": list(g.generator_names),
        "exponent": g.exponent,
        "relations": [{"relation": c.relation, "pass": c.passed} for c in relations.checks],
        "known_groups": list(GROUP_NAMES),
    })
    return info
