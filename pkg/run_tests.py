#!/usr/bin/env python
"""
Simple test runner script that runs the algebra test suite (same as `manage.py test algebra`).

    python run_tests.py                      # everything
    python run_tests.py algebra.test_dsl     # one module
"""
import os
import sys
import django
from django.conf import settings
from django.test.utils import get_runner

if __name__ == "__main__":
    os.environ['DJANGO_SETTINGS_MODULE'] = 'liefields.settings'
    django.setup()
    TestRunner = get_runner(settings)
    test_runner = TestRunner(verbosity=2)
    failures = test_runner.run_tests(sys.argv[1:] or ["algebra"])
    sys.exit(bool(failures))
