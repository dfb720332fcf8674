"""
Collision classes: catalog graphs sharing an abstract poset.
"""
from posetforge.posets.builders import normalize_kind


def collision_classes(catalog, kind, require_different=None):
    """Group catalog graphs by the abstract certificate of a poset kind.

    Parameters
    ----------
    catalog : Catalog

    kind : {'q', 'p', 'omega'}

    require_different : {'q', 'p', 'omega', None}, optional (default=None)
        Keep only the classes whose members do not all share the abstract
        poset of this kind.

    Returns
    -------
    classes : list of list of Graph
        Classes of size at least 2, members in catalog order, classes
        ordered by their first member.
    """
    kind = normalize_kind(kind)
    other = normalize_kind(require_different) \
        if require_different is not None else None
    position = {id(g): i for i, g in enumerate(catalog.graphs())}
    classes = []
    for members in catalog.abstract_index(kind).values():
        if len(members) < 2:
            continue
        if other is not None and len(
                {catalog.abstract_certificate(g, other) for g in members}) < 2:
            continue
        classes.append(sorted(members, key=lambda g: position[id(g)]))
    classes.sort(key=lambda members: position[id(members[0])])
    return classes
