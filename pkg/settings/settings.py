"""
Django settings for settings project.

Projeto sem superfície HTTP: o Django fornece configuração, cache,
logging, i18n das mensagens de erro e os comandos de gerenciamento
(`manage.py dims`, `compose`, `protocol`, ...).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""
from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Nenhum dado sensível passa por este projeto; a chave só satisfaz o Django.
SECRET_KEY = 'gpt-dimensions-offline-key-not-used-for-signing'

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'core',
    'gpt',
    'lp',
    'dimensions',
    'composition',
    'protocols',
    'thermo',
]

MIDDLEWARE = []


# Nada é persistido; o banco em memória só existe para o Django iniciar.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}


# Cache dos relatórios de dimensão
# https://docs.djangoproject.com/en/5.2/topics/cache/

GPT_CACHE_DIR = config('GPT_CACHE_DIR', default='')

if GPT_CACHE_DIR:
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.filebased.FileBasedCache',
            'LOCATION': GPT_CACHE_DIR,
            'TIMEOUT': None,
        }
    }
else:
    CACHES = {
        'default': {
            'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
        }
    }


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'pt-br'

TIME_ZONE = 'America/Sao_Paulo'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Logging: tudo vai para stderr, stdout fica reservado para os relatórios.

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app: {
            'handlers': ['stderr'],
            'level': 'WARNING',
            'propagate': False,
        }
        for app in ('core', 'gpt', 'lp', 'dimensions', 'composition', 'protocols', 'thermo')
    },
}


REST_FRAMEWORK = {
    'COERCE_DECIMAL_TO_STRING': True,
    'UNAUTHENTICATED_USER': None,
}


# Limites de recursos. Todos podem ser sobrescritos por flags dos comandos.

GPT_LIMITS = {
    # amplify(k) recusa sistemas com mais de 2^16 vértices (k <= 4)
    'AMPLIFY_VERTEX_CAP': 2 ** 16,
    # certificação exaustiva de d_m por padrão só até 16 vértices
    'CERTIFY_VERTEX_LIMIT': 16,
    # grupo de automorfismos acima disso não é usado para reduzir cliques
    'SYMMETRY_GROUP_CAP': 5_000,
    # grafo de distinguibilidade: um teste por par de vértices
    'GRAPH_MAX_VERTICES': 1024,
    'TRUTH_TABLE_MAX_ALICE_BITS': 10,
    'TRUTH_TABLE_MAX_BOB_BITS': 10,
    'IC_MAX_N': 16,
    'INDEX_MAX_N': 24,
    'PRBOX_MAX_D': 16,
    'DEMON_MAX_D': 64,
    'JOBS': 1,
}

# Constante de Boltzmann (J/K), valor exato do SI
BOLTZMANN_CONSTANT = 1.380649e-23
