import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(os.path.dirname(basedir), '.env'))


class Config:
    SYSTEM = os.environ.get('LAMKERNEL_SYSTEM') or 't'
    MAX_TERM_SIZE = int(os.environ.get('LAMKERNEL_MAX_TERM_SIZE') or 7)
    TYPED_MAX_TERM_SIZE = int(os.environ.get('LAMKERNEL_TYPED_MAX_TERM_SIZE') or 9)
    VARIABLES = int(os.environ.get('LAMKERNEL_VARIABLES') or 3)
    SUBSTITUTIONS = int(os.environ.get('LAMKERNEL_SUBSTITUTIONS') or 50)
    SEED = int(os.environ.get('LAMKERNEL_SEED') or 0)
    NODE_BUDGET = int(os.environ.get('LAMKERNEL_NODE_BUDGET') or 100000)
    FUEL = int(os.environ.get('LAMKERNEL_FUEL') or 10000)
    WORKERS = int(os.environ.get('LAMKERNEL_WORKERS') or 1)
    LOG_LEVEL = os.environ.get('LAMKERNEL_LOG_LEVEL') or 'WARNING'
    LOGGING_CONFIG = os.environ.get('LAMKERNEL_LOGGING_CONFIG') or os.path.join(
        os.path.dirname(basedir), 'logging.ini')

    @classmethod
    def corpus_defaults(cls) -> dict:
        """Raw CorpusConfig fields, ready for ``CorpusConfigSchema().load``."""
        return {
            'system': cls.SYSTEM,
            'max_term_size': cls.MAX_TERM_SIZE,
            'typed_max_term_size': cls.TYPED_MAX_TERM_SIZE,
            'variables': cls.VARIABLES,
            'substitution_pool_size': cls.SUBSTITUTIONS,
            'seed': cls.SEED,
            'node_budget': cls.NODE_BUDGET,
            'fuel': cls.FUEL,
            'workers': cls.WORKERS,
        }
