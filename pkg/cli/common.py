"""Shared plumbing for the laboratory's management commands."""
import contextlib
import hashlib
import json
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError as DjangoValidationError
from django.core.management.base import CommandError
from rest_framework import serializers

from cbpir_lab.exceptions import CBPIRError
from scheme.serializers import load_params_file


def add_params_argument(parser):
    parser.add_argument('--params', default=settings.CBPIR.get('PARAMS_PATH'),
                        help="ParamsFile JSON (default: $CBPIR_PARAMS)")


def add_seed_argument(parser):
    parser.add_argument('--seed', type=int, default=None,
                        help="experiment seed (default: the ParamsFile seed)")


def format_errors(detail):
    """Flatten serializer or model errors into 'key: message' lines."""
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {format_errors(value)}" for key, value in detail.items())
    if isinstance(detail, (list, tuple)):
        return ' '.join(format_errors(item) for item in detail)
    return str(detail)


def load_params(path):
    if not path:
        raise CommandError("no ParamsFile given; pass --params or set CBPIR_PARAMS", returncode=2)
    try:
        return load_params_file(path)
    except OSError as e:
        raise CommandError(f"cannot read {path}: {e.strerror}", returncode=1)
    except json.JSONDecodeError as e:
        raise CommandError(f"{path} is not JSON: {e}", returncode=1)
    except serializers.ValidationError as e:
        raise CommandError(f"invalid parameters in {path}: {format_errors(e.detail)}", returncode=1)


def resolve_seed(options, params_file):
    return params_file.seed if options.get('seed') is None else options['seed']


def params_hash(params_file):
    canonical = json.dumps(params_file.as_dict(), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


@contextlib.contextmanager
def domain_failures():
    """Report laboratory faults as exit status 1."""
    try:
        yield
    except CBPIRError as e:
        raise CommandError(f"{type(e).__name__}: {e}", returncode=1)
    except DjangoValidationError as e:
        raise CommandError(format_errors(e.message_dict), returncode=1)


def write_json(document, path=None, stream=None):
    text = json.dumps(document, indent=2, sort_keys=True)
    if path:
        Path(path).write_text(text + '\n', encoding='utf-8')
    else:
        stream.write(text)
