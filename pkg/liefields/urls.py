"""
URL configuration for liefields project.

The JSON API lives under /api/ (see algebra/urls.py and docs/API.md).
"""
from django.urls import path, include

urlpatterns = [
    path('api/', include('algebra.urls')),
]
