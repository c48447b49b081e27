"""Presentation config files: JSON documents declaring a graph and its vertex groups.

    {"name": "c5", "vertices": ["v1", ...], "edges": [["v1", "v2"], ...],
     "default_group": "cyclic 2",
     "groups": {"v1": "cyclic 2" | "infinite-cyclic" |
                {"kind": "table", "table": [[...]], "generators": [1]}},
     "meta": {"v1": {"is_graphically_irreducible": true}}}
"""

import json
import logging
from typing import Any, Dict, Optional

from models.errors import GraphProductError
from models.graph import SimplicialGraph
from models.presentation import (
    KIND_CYCLIC, KIND_INFINITE_CYCLIC, KIND_TABLE, Presentation, VertexGroupMeta, VertexGroupSpec,
)

logger = logging.getLogger('gpkit.presentation_io')


class ConfigError(ValueError):
    """A config that does not describe a valid presentation; position is line:column or a JSON path."""

    def __init__(self, message: str, position: str, source: str = '<config>'):
        super().__init__(f"{source}:{position}: {message}")
        self.message = message
        self.position = position
        self.source = source


def parse_config(path: str) -> Presentation:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise ConfigError(str(e), '0:0', path) from None
    presentation = parse_config_text(text, path)
    logger.info("Loaded presentation '%s' with %d vertices from %s",
                presentation.name, len(presentation.vertices), path)
    return presentation


def parse_config_text(text: str, source: str = '<config>') -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, f"{e.lineno}:{e.colno}", source) from None
    return parse_presentation(data, source)


def _require(condition: bool, message: str, path: str, source: str):
    if not condition:
        raise ConfigError(message, path, source)


def _parse_group(spec: Any, vertex: str, path: str, source: str) -> VertexGroupSpec:
    if isinstance(spec, str):
        parts = spec.split()
        if parts and parts[0] == KIND_CYCLIC and len(parts) == 2 and parts[1].isdigit():
            spec = {'kind': KIND_CYCLIC, 'order': int(parts[1])}
        elif parts == [KIND_INFINITE_CYCLIC]:
            spec = {'kind': KIND_INFINITE_CYCLIC}
        else:
            raise ConfigError(f"Unknown group spec '{spec}'; expected 'cyclic n', 'infinite-cyclic' or a table",
                              path, source)
    _require(isinstance(spec, dict) and 'kind' in spec, "Group spec must be a string or an object with 'kind'",
             path, source)
    if spec['kind'] == KIND_TABLE:
        _require(isinstance(spec.get('table'), list), "Table group needs a 'table' list", f"{path}.table", source)
    try:
        return VertexGroupSpec.from_dict(spec, vertex)
    except (GraphProductError, KeyError, TypeError, ValueError) as e:
        raise ConfigError(str(e), path, source) from None


def parse_presentation(data: Any, source: str = '<config>') -> Presentation:
    _require(isinstance(data, dict), "Top level must be an object", '$', source)
    vertices = data.get('vertices')
    _require(isinstance(vertices, list) and vertices, "'vertices' must be a non-empty list", 'vertices', source)
    seen = set()
    for i, v in enumerate(vertices):
        _require(isinstance(v, str) and v and not any(c.isspace() for c in v) and '^' not in v and ':' not in v,
                 f"Vertex id {v!r} must be a non-empty token without spaces, '^' or ':'", f"vertices[{i}]", source)
        _require(v not in seen, f"Duplicate vertex '{v}'", f"vertices[{i}]", source)
        seen.add(v)

    edges = data.get('edges', [])
    _require(isinstance(edges, list), "'edges' must be a list", 'edges', source)
    for i, edge in enumerate(edges):
        _require(isinstance(edge, list) and len(edge) == 2, "Edge must be a pair of vertices", f"edges[{i}]", source)
        for j, endpoint in enumerate(edge):
            _require(isinstance(endpoint, str) and endpoint in seen, f"Unknown vertex '{endpoint}'",
                     f"edges[{i}][{j}]", source)
        _require(edge[0] != edge[1], f"Loop at '{edge[0]}'", f"edges[{i}]", source)

    groups_data = data.get('groups', {})
    _require(isinstance(groups_data, dict), "'groups' must be an object", 'groups', source)
    for v in groups_data:
        _require(v in seen, f"Unknown vertex '{v}'", f"groups.{v}", source)
    default = data.get('default_group')
    groups: Dict[str, VertexGroupSpec] = {}
    for v in vertices:
        if v in groups_data:
            groups[v] = _parse_group(groups_data[v], v, f"groups.{v}", source)
        elif default is not None:
            groups[v] = _parse_group(default, v, 'default_group', source)
        else:
            raise ConfigError(f"No group for vertex '{v}' and no default_group", f"groups.{v}", source)

    meta = data.get('meta', {})
    _require(isinstance(meta, dict), "'meta' must be an object", 'meta', source)
    known_fields = set(VertexGroupMeta().to_dict())
    for v, fields in meta.items():
        _require(v in seen, f"Unknown vertex '{v}'", f"meta.{v}", source)
        _require(isinstance(fields, dict), "Metadata must be an object", f"meta.{v}", source)
        for key in fields:
            _require(key in known_fields, f"Unknown metadata field '{key}'", f"meta.{v}.{key}", source)

    graph = SimplicialGraph.build(vertices, edges)
    return Presentation(graph, groups, data.get('name', 'presentation'), {v: dict(f) for v, f in meta.items()})


def group_spec_text(group: VertexGroupSpec) -> Any:
    if group.kind == KIND_CYCLIC and tuple(group.generators) == (1,):
        return f"cyclic {group.order}"
    if group.kind == KIND_INFINITE_CYCLIC:
        return KIND_INFINITE_CYCLIC
    return group.to_dict()


def format_presentation(presentation: Presentation) -> dict:
    data = presentation.graph.to_dict()
    data = {'name': presentation.name, **data}
    data['groups'] = {v: group_spec_text(presentation.group(v)) for v in presentation.vertices}
    if presentation.meta_overrides:
        data['meta'] = {v: dict(f) for v, f in presentation.meta_overrides.items()}
    return data


def save_presentation(presentation: Presentation, path: str, indent: Optional[int] = 2):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(format_presentation(presentation), f, indent=indent, ensure_ascii=False)
