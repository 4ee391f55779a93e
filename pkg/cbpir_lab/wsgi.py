"""
WSGI config for cbpir_lab project.

It exposes the WSGI callable as a module-level variable named ``application``;
the only HTTP route is the frame transport under /api/pir/.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/howto/deployment/wsgi/
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'cbpir_lab.settings')

application = get_wsgi_application()
