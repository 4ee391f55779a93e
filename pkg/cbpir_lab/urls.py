"""
URL configuration for cbpir_lab project.

Only the frame transport is exposed over HTTP; everything else is driven
through management commands.
"""
from django.urls import path, include

urlpatterns = [
    path('api/pir/', include('wire.urls')),
]
