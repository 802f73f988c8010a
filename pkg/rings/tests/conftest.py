import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "zp_workbench.settings")
django.setup()
