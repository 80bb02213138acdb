import json
from pathlib import Path

from qzcodes.common import CodeField
from qzcodes.engine.engine import Engine
from qzcodes.errors import CodeStoreError

FORMAT = 'qzcodes-code'


class JsonEngine(Engine):
	"""
	Stores a built code as a single JSON document. Every field is written
	under its field name; word lists are lists of integer lists. Keys are
	sorted so identical codes give identical files.

	This engine supports the following options:

	+--------------+-----------------------------------------------------------+
	| Option       | Description                                               |
	+==============+===========================================================+
	| fields       | Dictionary containing zero or more fields, see            |
	|              | :py:class:`qzcodes.common.CodeField`                      |
	+--------------+-----------------------------------------------------------+
	"""

	def __init__(self, path, mode = 'x', **options):
		self.path = Path(path)
		self.fields = {}
		self.read_only = False
		self.closed = False

		if mode == 'r':
			"""r = open for reading"""
			if not self.path.is_file():
				raise FileNotFoundError('Path \'{0:s}\' does not point to a code file'.format(str(path)))
			self.__load()
			self.read_only = True

		elif mode == 'w':
			"""open for writing, truncating the file first"""
			self.__dump()

		elif mode == 'x':
			"""open for exclusive creation, failing if the file already exists (default)"""
			if self.path.exists():
				raise FileExistsError('Code file already exists at path \'{0:s}\''.format(str(self.path)))
			self.__dump()

		elif mode == 'a':
			"""a = open for writing, keeping the stored fields if the file exists"""
			if self.path.is_file():
				self.__load()
			else:
				self.__dump()

		else:
			raise ValueError('invalid mode: \'{0:s}\''.format(mode))

		fields = options.get('fields', None)
		if self.is_read_only() and fields is not None:
			raise ValueError('Cannot add fields when opening in read-only mode')
		elif fields is not None:
			self.update_fields(fields)

	def __load(self):
		with self.path.open('r', encoding='utf-8') as f:
			try:
				document = json.load(f)
			except json.JSONDecodeError as error:
				raise CodeStoreError('\'{0:s}\' is not a JSON document: {1!s}'.format(str(self.path), error)) from error
		if not isinstance(document, dict) or document.get('format') != FORMAT:
			raise CodeStoreError('\'{0:s}\' does not hold a stored code'.format(str(self.path)))
		for name, value in document.get('fields', {}).items():
			try:
				field = CodeField.from_field_name(name)
			except ValueError as error:
				raise CodeStoreError(str(error)) from error
			self.fields[field] = value

	def __dump(self):
		document = {
			'format': FORMAT,
			'fields': {field.field_name: value for field, value in self.fields.items()},
		}
		with self.path.open('w', encoding='utf-8') as f:
			json.dump(document, f, sort_keys=True, indent=1)
			f.write('\n')

	def update_fields(self, fields):
		changed_fields = super().update_fields(fields)
		if len(changed_fields) > 0:
			self.__dump()
		return changed_fields

	def is_closed(self):
		return self.closed

	def close(self):
		self.closed = True
