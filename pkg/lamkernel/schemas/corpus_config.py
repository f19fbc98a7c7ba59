from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from lamkernel.calculi import CALCULI
from lamkernel.models.corpus import CorpusConfig, variable_range
from lamkernel.models.term import Var
from lamkernel.utils.errors import ConfigError

_positive = validate.Range(min=1)
_natural = validate.Range(min=0)


class CorpusConfigSchema(Schema):
    system = fields.Str(load_default='t', validate=validate.OneOf(sorted(CALCULI)))
    max_term_size = fields.Int(load_default=7, validate=_positive)
    typed_max_term_size = fields.Int(load_default=9, validate=_positive)
    variables = fields.Int(load_default=3, validate=_positive)
    variable_pool = fields.List(fields.Int(validate=_natural), validate=validate.Length(min=1))
    substitution_pool_size = fields.Int(load_default=50, validate=_positive)
    seed = fields.Int(load_default=0, validate=_natural)
    node_budget = fields.Int(load_default=100000, validate=_positive)
    fuel = fields.Int(load_default=10000, validate=_natural)
    workers = fields.Int(load_default=1, validate=_positive)
    image_max_term_size = fields.Int(load_default=3, validate=_positive)
    max_reported_failures = fields.Int(load_default=20, validate=_natural)
    rec_spine_limit = fields.Int(load_default=200, validate=_natural)

    @validates_schema
    def validate_pool(self, data, **kwargs):
        pool = data.get('variable_pool')
        if pool is not None and len(set(pool)) != len(pool):
            raise ValidationError('Variables must be distinct', 'variable_pool')

    @post_load
    def make_config(self, data, **kwargs) -> CorpusConfig:
        count = data.pop('variables')
        pool = data.pop('variable_pool', None)
        data['variable_pool'] = tuple(Var(i) for i in pool) if pool else variable_range(count)
        return CorpusConfig(**data)


corpus_config_schema = CorpusConfigSchema()


def load_corpus_config(raw: dict) -> CorpusConfig:
    """Validate raw settings into a CorpusConfig, raising ConfigError per offending field."""
    try:
        return corpus_config_schema.load(raw)
    except ValidationError as e:
        raise ConfigError(e.messages)
