from marshmallow import Schema, fields


class FailureSchema(Schema):
    case = fields.Str()
    detail = fields.Str()


class LemmaResultSchema(Schema):
    name = fields.Str(required=True)
    cases = fields.Int()
    failures = fields.Int(attribute='failure_count')
    millis = fields.Int()
    passed = fields.Bool(dump_only=True)
    reproducers = fields.List(fields.Nested(FailureSchema), attribute='failures')


lemma_result_schema = LemmaResultSchema()
lemma_results_schema = LemmaResultSchema(many=True)
