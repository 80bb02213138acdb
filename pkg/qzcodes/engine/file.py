import pickle
import shutil
import time
from pathlib import Path

from qzcodes.common import CodeField
from qzcodes.engine.engine import Engine
from qzcodes.errors import CodeStoreError


class FileEngine(Engine):
	"""
	Stores a built code in a directory. Every word list field goes to its own
	`<field>.txt` file with one word per line, entries separated by spaces;
	the scalar fields are pickled to `code.pickle`. The word files can be read
	and diffed with ordinary text tools.

	This engine supports the following options:

	+--------------+-----------------------------------------------------------+
	| Option       | Description                                               |
	+==============+===========================================================+
	| fields       | Dictionary containing zero or more fields, see            |
	|              | :py:class:`qzcodes.common.CodeField`                      |
	+--------------+-----------------------------------------------------------+
	"""

	INFO_FILE = 'code.pickle'

	def __get_field_path(self, field):
		return self.path / '{0:s}.txt'.format(field.field_name)

	def __init__(self, path, mode = 'x', **options):
		# Defaults
		self.path = Path(path)
		self.fields = {}
		self.read_only = False
		self.closed = False

		# Parse the mode
		if mode == 'r':
			"""r = open for reading"""
			if not self.path.is_dir() or not (self.path / self.INFO_FILE).is_file():
				raise FileNotFoundError('Path \'{0:s}\' does not point to a code directory'.format(str(path)))
			self.__load()
			self.read_only = True

		elif mode == 'w':
			"""open for writing, truncating the directory first"""

			# Remove the directory if it exists
			if self.path.is_dir():
				shutil.rmtree(str(self.path), True)

				# Wait until it is removed
				try:
					while self.path.is_dir():
						time.sleep(0.001)
				except Exception:
					pass

			self.path.mkdir()
			self.__dump_info()

		elif mode == 'x':
			"""open for exclusive creation, failing if the directory already exists (default)"""
			if self.path.is_dir():
				raise FileExistsError('Code store already exists at path \'{0:s}\''.format(str(self.path)))
			self.path.mkdir()
			self.__dump_info()

		elif mode == 'a':
			"""a = open for writing, keeping the stored fields if the directory exists"""
			if self.path.is_dir() and (self.path / self.INFO_FILE).is_file():
				self.__load()
			else:
				self.path.mkdir()
				self.__dump_info()

		else:
			raise ValueError('invalid mode: \'{0:s}\''.format(mode))

		fields = options.get('fields', None)
		if self.is_read_only() and fields is not None:
			raise ValueError('Cannot add fields when opening in read-only mode')
		elif fields is not None:
			self.update_fields(fields)

	def __load(self):
		with (self.path / self.INFO_FILE).open('rb') as f:
			scalars = pickle.load(f)
		for name, value in scalars.items():
			self.fields[CodeField.from_field_name(name)] = value

		for field in CodeField:
			if not field.is_list:
				continue
			path = self.__get_field_path(field)
			if not path.is_file():
				continue
			words = []
			with path.open('r', encoding='utf-8') as f:
				for number, line in enumerate(f, start=1):
					try:
						words.append([int(token) for token in line.split()])
					except ValueError:
						raise CodeStoreError('{0:s}:{1:d}: expected integers'.format(str(path), number)) from None
			self.fields[field] = words

	def __dump_info(self):
		scalars = {field.field_name: value for field, value in self.fields.items() if not field.is_list}
		with (self.path / self.INFO_FILE).open('wb') as f:
			pickle.dump(scalars, f)

	def update_fields(self, fields):
		changed_fields = super().update_fields(fields)
		if any(not field.is_list for field in changed_fields):
			self.__dump_info()
		for field, value in changed_fields.items():
			if field.is_list:
				with self.__get_field_path(field).open('w', encoding='utf-8') as f:
					for word in value:
						f.write(' '.join(str(entry) for entry in word) + '\n')
		return changed_fields

	def is_closed(self):
		return self.closed or not self.path.is_dir() or not (self.path / self.INFO_FILE).is_file()

	def close(self):
		self.closed = True
