import json

import pytest

from models.presentation import KIND_CYCLIC, KIND_INFINITE_CYCLIC
from tests import presentation_path
from utils import ConfigError, format_presentation, parse_config, parse_config_text, parse_presentation, save_presentation


def document(**overrides):
    data = {'name': 'tiny', 'vertices': ['a', 'b'], 'edges': [['a', 'b']], 'default_group': 'cyclic 2'}
    data.update(overrides)
    return data


class TestParse:
    def test_bundled_pentagon(self):
        presentation = parse_config(presentation_path('c5'))
        assert presentation.name == 'c5'
        assert presentation.vertices == ('v1', 'v2', 'v3', 'v4', 'v5')
        assert len(presentation.graph.edges) == 5
        assert presentation.group('v1').kind == KIND_CYCLIC

    def test_group_overrides_default(self):
        presentation = parse_presentation(document(groups={'b': 'infinite-cyclic'}))
        assert presentation.group('a').order == 2
        assert presentation.group('b').kind == KIND_INFINITE_CYCLIC

    def test_table_group(self):
        table = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
        presentation = parse_presentation(document(groups={'a': {'kind': 'table', 'table': table, 'generators': [1]}}))
        assert presentation.group('a').is_finite

    def test_metadata_overrides(self):
        presentation = parse_presentation(document(meta={'a': {'aut_is_finite': False}}))
        assert presentation.meta_overrides == {'a': {'aut_is_finite': False}}


class TestErrors:
    def test_json_syntax_error_has_line_and_column(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config_text('{\n  "vertices": [\n', 'broken.json')
        assert excinfo.value.position.count(':') == 1
        assert excinfo.value.position.startswith('3:')
        assert str(excinfo.value).startswith('broken.json:3:')

    @pytest.mark.parametrize('overrides,position', [
        ({'vertices': []}, 'vertices'),
        ({'vertices': ['a', 'a']}, 'vertices[1]'),
        ({'vertices': ['a', 'b c']}, 'vertices[1]'),
        ({'edges': [['a', 'z']]}, 'edges[0][1]'),
        ({'edges': [['a', 'a']]}, 'edges[0]'),
        ({'edges': [['a']]}, 'edges[0]'),
        ({'groups': {'z': 'cyclic 2'}}, 'groups.z'),
        ({'groups': {'a': 'cyclic two'}}, 'groups.a'),
        ({'default_group': None}, 'groups.a'),
        ({'meta': {'a': {'colour': 'red'}}}, 'meta.a.colour'),
    ])
    def test_positions(self, overrides, position):
        with pytest.raises(ConfigError) as excinfo:
            parse_presentation(document(**overrides))
        assert excinfo.value.position == position

    def test_top_level_must_be_object(self):
        with pytest.raises(ConfigError) as excinfo:
            parse_config_text('[1, 2]')
        assert excinfo.value.position == '$'

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            parse_config(str(tmp_path / 'missing.json'))


class TestSave:
    def test_saved_file_parses_back(self, tmp_path):
        original = parse_config(presentation_path('z_z3z2'))
        path = tmp_path / 'copy.json'
        save_presentation(original, str(path))
        reloaded = parse_config(str(path))
        assert reloaded.graph == original.graph
        assert format_presentation(reloaded) == format_presentation(original)

    def test_format_uses_short_group_names(self):
        data = format_presentation(parse_presentation(document(groups={'b': 'infinite-cyclic'})))
        assert data['groups'] == {'a': 'cyclic 2', 'b': 'infinite-cyclic'}
        json.dumps(data)
