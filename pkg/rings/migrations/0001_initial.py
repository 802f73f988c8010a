from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('verb', models.CharField(choices=[('compute', 'Compute'), ('bounds', 'Bounds'), ('verify', 'Verify'), ('classify', 'Classify'), ('table', 'Reference value table'), ('catalog', 'Catalog')], max_length=20)),
                ('ring', models.CharField(blank=True, max_length=255)),
                ('k_range', models.CharField(blank=True, max_length=50)),
                ('status', models.CharField(choices=[('passed', 'Passed'), ('failed', 'Failed')], max_length=20)),
                ('violation_count', models.PositiveIntegerField(default=0)),
                ('report', models.JSONField(blank=True, default=dict)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
    ]
